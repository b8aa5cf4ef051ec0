#include "lpackets/jobs.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace lpk {

namespace {

RatVec parse_rat_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + " must be a list of rationals");
  RatVec out;
  for (const auto& e : j) {
    if (e.is_string())
      out.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      out.push_back(Rat(e.get<long long>()));
    else
      throw Error(what + ": entries must be \"p/q\" strings or integers");
  }
  return out;
}

std::vector<std::string> rat_list(const RatVec& v) {
  std::vector<std::string> out;
  for (const Rat& x : v) out.push_back(rational_str(x));
  return out;
}

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.convert_to<long long>());
  return a;
}

Json roots_json(const std::vector<IntVec>& roots) {
  Json a = Json::array();
  for (const IntVec& r : roots) a.push_back(vec_json(r));
  return a;
}

BasedRootDatum parse_group(const Json& j) {
  if (j.is_string()) return make_datum(j.get<std::string>());
  if (!j.is_object())
    throw Error("group must be a builtin name or an explicit lattice object");
  BasedRootDatum d;
  d.rank = j.at("rank").get<int>();
  auto read_vecs = [&](const char* key) {
    std::vector<IntVec> out;
    for (const auto& row : j.at(key)) {
      IntVec v;
      for (const auto& e : row) v.push_back(Int(e.get<long long>()));
      out.push_back(v);
    }
    return out;
  };
  d.roots = read_vecs("roots");
  d.coroots = read_vecs("coroots");
  for (const auto& e : j.at("simple")) d.simple.push_back(e.get<int>());
  require_valid(d);
  return d;
}

Json group_json(const BasedRootDatum& d) {
  Json g;
  g["rank"] = d.rank;
  g["roots"] = roots_json(d.roots);
  g["coroots"] = roots_json(d.coroots);
  g["simple"] = d.simple;
  if (!d.name.empty()) g["name"] = d.name;
  return g;
}

Json complex_json(const Complex& z) {
  return Json::array({z.real(), z.imag()});
}

struct Context {
  JobConfig cfg;
  std::vector<WeylElement> w;
  PositiveSystem base;
  Grading qs;
  Grading form;
  DiscreteParameter param;
  DualTorsionElement s;
};

Context make_context(const JobConfig& cfg) {
  Context ctx{cfg, weyl_group(cfg.datum), based_system(cfg.datum)};
  ctx.qs = quasisplit_grading(cfg.datum, ctx.base);
  ctx.form = cfg.quasisplit ? ctx.qs
                            : twisted_grading(cfg.datum, ctx.qs, cfg.form_class);
  ctx.param = make_parameter(cfg.datum, cfg.lambda);
  RatVec nu = cfg.s.empty() ? RatVec(cfg.datum.rank, Rat(0)) : cfg.s;
  ctx.s = make_torsion(cfg.datum, nu);
  return ctx;
}

Json members_json(const Context& ctx, const Packet& packet) {
  Json arr = Json::array();
  GenericityInfo gen;
  bool have_gen = ctx.cfg.quasisplit;
  if (have_gen) gen = generic_members(packet, ctx.w);
  for (std::size_t i = 0; i < packet.members.size(); ++i) {
    const PacketMember& m = packet.members[i];
    Json row;
    row["coset_rep_length"] = m.u.length;
    Json mat = Json::array();
    for (const Int& x : m.u.m.a) mat.push_back(x.convert_to<long long>());
    row["coset_rep_matrix"] = mat;
    row["inv_class"] = vec_json(m.inv_class.reduced());
    row["pairing"] = pairing_sign(m, ctx.s);
    if (have_gen) {
      row["generic"] = gen.member_whittaker[i] >= 0;
      row["whittaker_datum"] = gen.member_whittaker[i];
    }
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

JobConfig parse_config(const Json& j) {
  JobConfig cfg;
  try {
    cfg.datum = parse_group(j.at("group"));
    cfg.group_label = j.at("group").is_string()
                          ? j.at("group").get<std::string>()
                          : cfg.datum.name.empty() ? "custom" : cfg.datum.name;
    cfg.lambda = parse_rat_list(j.at("lambda"), "lambda");
    if (j.contains("s")) cfg.s = parse_rat_list(j.at("s"), "s");
    if (j.contains("form")) {
      const Json& f = j.at("form");
      if (f.is_string()) {
        if (f.get<std::string>() != "quasisplit")
          throw Error("form must be \"quasisplit\" or a class vector");
      } else {
        cfg.quasisplit = false;
        RatVec cls = parse_rat_list(f, "form");
        for (const Rat& x : cls) cfg.form_class.push_back(int_part(x));
      }
    }
    if (j.contains("samples")) cfg.samples = j.at("samples").get<int>();
    if (j.contains("seed"))
      cfg.seed = j.at("seed").get<unsigned long long>();
    if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
  } catch (const Json::exception& e) {
    throw Error(std::string("config error: ") + e.what());
  }
  if (cfg.samples <= 0) throw Error("config error: samples must be positive");
  return cfg;
}

JobConfig parse_config_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw Error("config error: malformed JSON");
  return parse_config(j);
}

Json describe(const JobConfig& cfg) {
  Context ctx = make_context(cfg);
  const BasedRootDatum& d = cfg.datum;
  Json out;
  out["group"] = group_json(d);
  out["dual_group"] = group_json(dual(d));
  out["weyl_order"] = ctx.w.size();
  out["rho"] = rat_list(rho(d, ctx.base));
  out["rho_check"] = rat_list(rho_check(d, ctx.base));
  out["grading_mu"] = rat_list(ctx.form.mu);
  Json comp = Json::array();
  for (int i : compact_roots(d, ctx.form)) comp.push_back(vec_json(d.roots[i]));
  out["compact_roots"] = comp;
  out["real_weyl_order"] = real_weyl_group(d, ctx.w, ctx.form).size();
  out["q_invariant"] = q_invariant(d, ctx.form, ctx.base);
  out["kottwitz_sign"] = kottwitz_sign(d, ctx.form, ctx.qs, ctx.base);
  FiniteAbelianGroup h1 = h1_of_torus(d);
  out["h1_invariant_factors"] = vec_json(h1.invariant_factors);
  ComponentGroup cg = component_group(ctx.param);
  out["component_group"] = {
      {"pure", vec_json(cg.pure.invariant_factors)},
      {"rigid", vec_json(cg.rigid.invariant_factors)},
  };
  Json orbits = Json::array();
  for (const PureFormOrbit& o : pure_forms(d, ctx.w, ctx.base)) {
    Json ocl = Json::array();
    for (const IntVec& c : o.classes) ocl.push_back(vec_json(c));
    orbits.push_back(ocl);
  }
  out["pure_form_orbits"] = orbits;
  return out;
}

Json packet_report(const JobConfig& cfg) {
  Context ctx = make_context(cfg);
  Packet packet = enumerate_packet(ctx.param, ctx.form, ctx.w);
  Json out;
  out["group"] = cfg.group_label;
  out["lambda"] = rat_list(cfg.lambda);
  out["s"] = rat_list(ctx.s.nu);
  out["form"] = cfg.quasisplit ? Json("quasisplit") : vec_json(cfg.form_class);
  out["packet_size"] = packet.members.size();
  out["real_weyl_order"] = packet.real_weyl.size();
  out["q_form"] = packet.q_form;
  out["members"] = members_json(ctx, packet);
  if (cfg.quasisplit) {
    GenericityInfo gen = generic_members(packet, ctx.w);
    out["whittaker_count"] = gen.whittaker_count;
    out["generic_count"] = gen.generic_members.size();
  }
  return out;
}

Json endoscopy_report(const JobConfig& cfg) {
  Context ctx = make_context(cfg);
  EndoscopicSide side = build_endoscopic(cfg.datum, ctx.s, ctx.param.chamber);
  Json out;
  out["group"] = cfg.group_label;
  out["s"] = rat_list(ctx.s.nu);
  Json hr = Json::array();
  for (int i : side.h_roots) hr.push_back(vec_json(cfg.datum.roots[i]));
  out["h_roots"] = hr;
  Json hs = Json::array();
  for (int i : side.h_datum.simple) hs.push_back(vec_json(side.h_datum.roots[i]));
  out["h_simple"] = hs;
  out["h_rank_semisimple"] = side.h_datum.simple.size();
  out["r_g"] = side.r_g;
  out["r_h"] = side.r_h;
  out["q_g0"] =
      q_invariant(cfg.datum, ctx.qs, ctx.param.chamber);
  out["q_h"] = side.q_h;
  out["epsilon"] = complex_json(epsilon_factor(side));
  out["h_weyl_order"] = [&] {
    std::size_t n = 0;
    std::set<std::vector<Int>> elems;
    std::vector<WeylElement> frontier{weyl_identity(cfg.datum)};
    elems.insert(frontier[0].m.a);
    while (!frontier.empty()) {
      std::vector<WeylElement> next;
      for (const WeylElement& x : frontier)
        for (int i : side.h_roots) {
          WeylElement y = weyl_compose(reflection(cfg.datum, i), x);
          if (elems.insert(y.m.a).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    n = elems.size();
    return n;
  }();
  return out;
}

Json verify_report(const JobConfig& cfg) {
  Context ctx = make_context(cfg);
  VerifyReport rep = verify_identity(ctx.param, ctx.s, ctx.form, cfg.samples,
                                     cfg.seed, cfg.tolerance);
  Json out;
  out["config"] = {
      {"group", cfg.group_label},
      {"lambda", rat_list(cfg.lambda)},
      {"s", rat_list(ctx.s.nu)},
      {"form", cfg.quasisplit ? Json("quasisplit") : vec_json(cfg.form_class)},
      {"samples", cfg.samples},
      {"seed", cfg.seed},
      {"tolerance", cfg.tolerance},
  };
  if (!rep.supported) {
    out["supported"] = false;
    out["reason"] = rep.unsupported_reason;
    return out;
  }
  out["supported"] = true;

  Packet packet = enumerate_packet(ctx.param, ctx.form, ctx.w);
  out["packet"] = {
      {"size", packet.members.size()},
      {"members", members_json(ctx, packet)},
  };
  EndoscopicSide side = build_endoscopic(cfg.datum, ctx.s, ctx.param.chamber);
  Json hr = Json::array();
  for (int i : side.h_roots) hr.push_back(vec_json(cfg.datum.roots[i]));
  out["endoscopy"] = {
      {"h_roots", hr},
      {"epsilon", complex_json(epsilon_factor(side))},
      {"q_h", side.q_h},
      {"r_h", side.r_h},
  };
  Json per = Json::array();
  for (std::size_t i = 0; i < rep.per_sample.size(); ++i) {
    const SampleResult& r = rep.per_sample[i];
    per.push_back({
        {"index", i},
        {"t", r.t},
        {"lhs", complex_json(r.lhs)},
        {"rhs_a", complex_json(r.rhs_a)},
        {"rhs_b", complex_json(r.rhs_b)},
        {"residual", r.residual},
        {"rhs_consistency", r.rhs_consistency},
    });
  }
  out["per_sample"] = per;
  out["max_residual"] = rep.max_residual;
  out["max_rhs_consistency"] = rep.max_rhs_consistency;
  out["pass"] = rep.pass;
  out["generator"] = rep.generator;
  out["disclosure"] = rep.disclosure;
  return out;
}

Json oracle_report(const std::string& family) {
  OracleReport rep = run_oracle(family);
  Json out;
  out["family"] = rep.family;
  Json rows = Json::array();
  for (const OracleRow& r : rep.rows)
    rows.push_back({
        {"quantity", r.quantity},
        {"oracle", r.oracle_value},
        {"combinatorial", r.combinatorial_value},
        {"match", r.match},
    });
  out["rows"] = rows;
  out["all_match"] = rep.all_match;
  return out;
}

int exit_code_for_verify(const Json& report) {
  if (!report.value("supported", true)) return 3;
  return report.value("pass", false) ? 0 : 1;
}

int exit_code_for_oracle(const Json& report) {
  return report.value("all_match", false) ? 0 : 4;
}

}  // namespace lpk
