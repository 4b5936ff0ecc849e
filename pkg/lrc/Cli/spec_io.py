"""lrc.Cli.spec_io

Code-spec JSON and the text formats for messages and codewords.

A code spec names the construction and carries everything needed to
rebuild the code deterministically; the stored basis is compared with the
rebuilt one so a spec that was edited by hand is rejected rather than
silently reinterpreted. Codeword files hold one canonical integer per line
with "?" for an erasure; product codes use a grid of n1 lines of n2
symbols. Message files are whitespace separated.
"""

import json
from typing import List, Optional, Sequence

from lrc.Core.lrc_core import (build, build_from_mapping, build_reed_solomon,
                               systematic_build)
from lrc.errors import ParameterError
from lrc.Field.gf import FieldElement, FieldSpec
from lrc.General.general import ArbitraryLengthCode, build_arbitrary_linear, crt_build, local_mds_build
from lrc.Good_Poly.goodpoly import Partition, make_good_polynomial
from lrc.Multiset.multiset import build_lrc_multi, product_build
from lrc.Poly.poly import Polynomial

SPEC_VERSION = 1
ERASURE = "?"


# ===============================
# code -> spec
# ===============================

def code_to_spec(code) -> dict:
    construction = code.construction
    spec = {"version": SPEC_VERSION, "construction": construction, "field": code.field.to_json()}
    if construction == "product":
        c1, c2 = code.components
        spec["params"] = {"n": code.n, "k": code.k}
        spec["product"] = {"c1": code_to_spec(c1), "c2": code_to_spec(c2)}
        return spec

    spec["params"] = {"n": code.n, "k": code.k}
    if hasattr(code, "r"):
        spec["params"]["r"] = code.r
    spec["position_locations"] = [a.value for a in code.locations]
    spec["basis"] = [f.to_ints() for f in code.basis]

    if construction in ("lrc", "systematic", "local_mds", "arbitrary", "mapping"):
        spec["partition"] = code.partition.to_ints()
    if construction in ("lrc", "systematic", "local_mds") or (construction == "arbitrary" and code.good is not None):
        spec["g"] = code.good.g.to_ints()
    if construction == "systematic":
        spec["systematic"] = {"info_points": [[a.value for a in b] for b in code.info_points]}
    if construction == "local_mds":
        spec["rho"] = code.rho
    if construction == "multi":
        spec["partitions"] = [p.to_ints() for p in code.partitions]
        spec["m"] = code.m
    if construction == "crt":
        spec["blocks"] = [{"points": [code.locations[p].value for p in block], "k": ki}
                          for block, ki in zip(code.blocks, code.local_dims)]
    return spec


def dump_spec(code) -> str:
    return json.dumps(code_to_spec(code), indent=2)


# ===============================
# spec -> code
# ===============================

def _require(data: dict, *keys: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise ParameterError(f"code spec is missing {', '.join(missing)}")


def _rebuild(field: FieldSpec, data: dict):
    construction = data["construction"]
    params = data["params"]
    k = int(params["k"])

    if construction == "product":
        _require(data, "product")
        return product_build(spec_to_code(data["product"]["c1"]), spec_to_code(data["product"]["c2"]))
    if construction == "rs":
        _require(data, "position_locations")
        return build_reed_solomon(field, [field.element(v) for v in data["position_locations"]], k)
    if construction == "multi":
        _require(data, "partitions")
        return build_lrc_multi(field, [Partition.from_ints(field, p) for p in data["partitions"]], k)
    if construction == "crt":
        _require(data, "blocks")
        blocks = [([field.element(v) for v in b["points"]], int(b["k"])) for b in data["blocks"]]
        return crt_build(field, blocks, k)

    _require(data, "partition")
    partition = Partition.from_ints(field, data["partition"])
    if construction == "mapping":
        _require(data, "basis", "params")
        basis = [Polynomial(field, b) for b in data["basis"]]
        return build_from_mapping(field, partition, int(params["r"]), basis)
    if construction == "arbitrary" and "g" not in data:
        basis = [Polynomial(field, b) for b in data["basis"]]
        return ArbitraryLengthCode(field, partition, int(params["r"]), basis)

    _require(data, "g")
    good = make_good_polynomial(Polynomial(field, data["g"]), partition)
    if construction == "lrc":
        return build(field, good, k)
    if construction == "systematic":
        code = build(field, good, k)
        info = data.get("systematic", {}).get("info_points")
        points = [[field.element(v) for v in b] for b in info] if info else None
        return systematic_build(code, points)
    if construction == "arbitrary":
        return build_arbitrary_linear(field, good, k)
    if construction == "local_mds":
        _require(data, "rho")
        return local_mds_build(field, good, k, int(data["rho"]))
    raise ParameterError(f"unknown construction {construction!r}")


def spec_to_code(data: dict):
    if not isinstance(data, dict):
        raise ParameterError("code spec must be a JSON object")
    _require(data, "construction", "field", "params")
    version = data.get("version", SPEC_VERSION)
    if version != SPEC_VERSION:
        raise ParameterError(f"unsupported code spec version {version}")
    field = FieldSpec.from_json(data["field"])
    code = _rebuild(field, data)
    if "basis" in data and data["construction"] != "product":
        stored = [Polynomial(field, b).to_ints() for b in data["basis"]]
        if stored != [f.to_ints() for f in code.basis]:
            raise ParameterError("stored basis does not match the rebuilt code")
    if "position_locations" in data and data["construction"] != "product":
        if [a.value for a in code.locations] != [field.element(v).value for v in data["position_locations"]]:
            raise ParameterError("stored position locations do not match the rebuilt code")
    return code


def load_spec(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"code spec is not valid JSON: {exc}") from exc
    return spec_to_code(data)


# ===============================
# messages and codewords
# ===============================

def _symbol(field: FieldSpec, token: str) -> FieldElement:
    try:
        value = int(token)
    except ValueError as exc:
        raise ParameterError(f"symbol {token!r} is not an integer") from exc
    if not 0 <= value < field.q:
        raise ParameterError(f"symbol {value} is outside {field!r}")
    return field.element(value)


def parse_message(text: str, field: FieldSpec) -> List[FieldElement]:
    return [_symbol(field, tok) for tok in text.split()]


def format_message(message: Sequence[FieldElement]) -> str:
    return " ".join(str(int(a)) for a in message) + "\n"


def parse_symbols(text: str, field: FieldSpec) -> List[Optional[FieldElement]]:
    """Whitespace-separated symbols in file order; "?" marks an erasure."""
    return [None if tok == ERASURE else _symbol(field, tok) for tok in text.split()]


def format_symbols(symbols: Sequence[Optional[FieldElement]], width: Optional[int] = None) -> str:
    """One symbol per line, or rows of `width` symbols for grid codewords."""
    tokens = [ERASURE if s is None else str(int(s)) for s in symbols]
    if not width:
        return "\n".join(tokens) + "\n"
    return "\n".join(" ".join(tokens[i:i + width]) for i in range(0, len(tokens), width)) + "\n"
