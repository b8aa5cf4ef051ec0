import json
import os
import sys

import pytest

# in-tree runs find the extension next to the build directory
ext_dir = os.environ.get("PYTHONPATH", "")
if ext_dir and ext_dir not in sys.path:
    sys.path.insert(0, ext_dir)

try:
    import lpackets
except ImportError:
    # built extension without the installed package: import it directly
    # and fabricate the package-level helpers used below
    import _lpackets as core

    class _Shim:
        LpacketsError = core.LpacketsError
        builtin_groups = staticmethod(core.builtin_groups)
        weyl_order = staticmethod(core.weyl_order)

        @staticmethod
        def _call(fn, config):
            if isinstance(config, dict):
                config = json.dumps(config)
            return json.loads(fn(config))

        def describe(self, c):
            return self._call(core.describe_json, c)

        def packet(self, c):
            return self._call(core.packet_json, c)

        def endoscopy(self, c):
            return self._call(core.endoscopy_json, c)

        def verify(self, c):
            return self._call(core.verify_json, c)

        def oracle(self, fam):
            return json.loads(core.oracle_json(fam))

    lpackets = _Shim()


A1 = {"group": "A1-sc", "lambda": ["1"], "s": ["1/2"], "samples": 50, "seed": 1}


def test_builtins_and_weyl_orders():
    names = lpackets.builtin_groups()
    assert "A1-sc" in names and "C2-sc" in names
    assert lpackets.weyl_order("A1-sc") == 2
    assert lpackets.weyl_order("G2-sc") == 12


def test_describe():
    rep = lpackets.describe(A1)
    assert rep["weyl_order"] == 2
    assert rep["h1_invariant_factors"] == [2]
    assert rep["component_group"]["rigid"] == [4]


def test_packet():
    rep = lpackets.packet(A1)
    assert rep["packet_size"] == 2
    assert [m["pairing"] for m in rep["members"]] == [1, -1]


def test_verify_passes():
    rep = lpackets.verify(A1)
    assert rep["pass"] is True
    assert rep["max_residual"] < 1e-8


def test_verify_c2_endoscopic_side():
    cfg = {
        "group": "C2-sc",
        "lambda": ["2", "1"],
        "s": ["0", "1/2"],
        "samples": 25,
        "seed": 7,
    }
    side = lpackets.endoscopy(cfg)
    assert side["r_h"] == 4 and side["q_h"] == 2
    rep = lpackets.verify(cfg)
    assert rep["pass"] is True


def test_oracle():
    rep = lpackets.oracle("A1-sc")
    assert rep["all_match"] is True


def test_errors():
    with pytest.raises(lpackets.LpacketsError):
        lpackets.describe({"group": "A1-sc", "lambda": ["3/0"]})
