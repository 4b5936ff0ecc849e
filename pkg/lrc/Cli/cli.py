"""lrc.Cli.cli

Command-line surface. Each command has a handler that accepts an event dict
and returns a response dict `{"statusCode": int, "body": str}` with a JSON
body (`{"error": ...}` on failure); the click commands below read files,
call the handlers and print.

Status codes: 200 ok, 400 parameter or format error, 422 decode failure,
500 unexpected. The process exit code is 0, 2, 3 or 1 respectively.
"""

import json
import logging
import sys
from math import gcd

import click

from lrc import config
from lrc.Bounds.bounds import bound_report
from lrc.Catalog.catalog import build_example, example_names
from lrc.Cli.spec_io import (code_to_spec, format_message, format_symbols, load_spec, parse_message,
                             parse_symbols)
from lrc.Core.lrc_core import build, build_reed_solomon, systematic_build
from lrc.errors import DecodeError, ParameterError
from lrc.Field.gf import FieldSpec, field_of_order, is_prime, smallest_element_of_order
from lrc.General.general import build_arbitrary_linear, crt_build, local_mds_build
from lrc.Good_Poly.goodpoly import coset_partition, from_multiplicative_subgroup, plan_good_polynomial
from lrc.Multiset.multiset import build_lrc_multi, product_build
from lrc.Oracle.oracle import erasure_decode_global
from lrc.Oracle.verify_runner import run_all_checks

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ("lrc", "systematic", "multi", "product", "arbitrary", "crt", "local_mds")
EXIT_CODES = {200: 0, 400: 2, 422: 3, 500: 1}


def _ok(payload) -> dict:
    return {"statusCode": 200, "body": json.dumps(payload)}


def _error(status: int, message: str) -> dict:
    return {"statusCode": status, "body": json.dumps({"error": message})}


def _handle(fn):
    """Translate library exceptions raised inside a handler into response dicts."""
    def wrapper(event):
        try:
            return _ok(fn(event))
        except ParameterError as exc:
            logger.info("parameter error: %s", exc)
            return _error(400, str(exc))
        except DecodeError as exc:
            logger.info("decode error: %s", exc)
            return _error(422, str(exc))
        except Exception as exc:
            logger.exception("unexpected failure")
            return _error(500, f"Internal processing error: {exc}")
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ===============================
# code generation
# ===============================

def _field_from_event(event) -> FieldSpec:
    if event.get("p"):
        return FieldSpec(int(event["p"]), int(event.get("l") or 1))
    if event.get("q"):
        return field_of_order(int(event["q"]))
    if event.get("n"):
        # smallest prime field with n nonzero points
        q = int(event["n"]) + 1
        while not is_prime(q):
            q += 1
        return FieldSpec(q)
    raise ParameterError("give the field as --q or --p/--l")


def _need(event, *keys):
    missing = [k for k in keys if event.get(k) is None]
    if missing:
        raise ParameterError(f"missing --{', --'.join(missing)}")
    return [int(event[k]) for k in keys]


def _lrc_from_flags(field: FieldSpec, n: int, k: int, r: int, seed):
    if r > k:
        raise ParameterError(f"locality r={r} exceeds k={k}")
    if n % (r + 1):
        if r == k:
            points = [field.element(v) for v in list(range(1, field.q)) + [0]][:n]
            if len(points) < n:
                raise ParameterError(f"n={n} exceeds q={field.q}")
            return build_reed_solomon(field, points, k)
        raise ParameterError(f"r+1 = {r + 1} does not divide n={n}; use --construction arbitrary")
    good = plan_good_polynomial(field, r + 1, n // (r + 1), seed=seed)
    return build(field, good, k)


def _multi_from_flags(field: FieldSpec, n: int, k: int, r: int, s: int):
    b1, b2 = r + 1, s + 1
    if gcd(b1, b2) != 1:
        raise ParameterError(f"block sizes {b1} and {b2} must be coprime for orthogonal coset partitions")
    if (field.q - 1) % (b1 * b2) or n % (b1 * b2) or n > field.q - 1:
        raise ParameterError(f"need {b1 * b2} | q-1 and {b1 * b2} | n <= q-1, got q={field.q}, n={n}")
    both = smallest_element_of_order(field, b1 * b2)
    support = list(from_multiplicative_subgroup(field, both, n // (b1 * b2)).partition.support)
    p1 = coset_partition(field, smallest_element_of_order(field, b1), support)
    p2 = coset_partition(field, smallest_element_of_order(field, b2), support)
    return build_lrc_multi(field, [p1, p2], k)


def _crt_from_flags(field: FieldSpec, k: int, blocks_flag: str):
    try:
        table = [tuple(int(x) for x in item.split(":")) for item in blocks_flag.split(",")]
    except ValueError as exc:
        raise ParameterError(f"--blocks must look like 4:2,4:2, got {blocks_flag!r}") from exc
    if any(len(entry) != 2 for entry in table):
        raise ParameterError(f"--blocks must look like 4:2,4:2, got {blocks_flag!r}")
    points = [field.element(v) for v in range(1, field.q)]
    if sum(size for size, _ in table) > len(points):
        raise ParameterError("blocks do not fit in the nonzero field elements")
    blocks, start = [], 0
    for size, ki in table:
        blocks.append((points[start:start + size], ki))
        start += size
    return crt_build(field, blocks, k)


def generate_code(event):
    """Build a code from gen flags (or a catalog example name)."""
    if event.get("example"):
        return build_example(event["example"])
    construction = event.get("construction") or ("multi" if event.get("multi") else "lrc")
    if construction not in CONSTRUCTIONS:
        raise ParameterError(f"unknown construction {construction!r}")
    field = _field_from_event(event)
    seed = event.get("seed")
    if construction == "crt":
        (k,) = _need(event, "k")
        if not event.get("blocks"):
            raise ParameterError("crt codes need --blocks")
        return _crt_from_flags(field, k, event["blocks"])
    n, k, r = _need(event, "n", "k", "r")
    if construction in ("lrc", "systematic"):
        code = _lrc_from_flags(field, n, k, r, seed)
        return systematic_build(code) if construction == "systematic" else code
    if construction == "multi":
        (s,) = _need(event, "s")
        return _multi_from_flags(field, n, k, r, s)
    if construction == "product":
        s = int(event["s"]) if event.get("s") is not None else r
        c1 = _lrc_from_flags(field, n, k, r, seed)
        c2 = c1 if s == r else _lrc_from_flags(field, n, k, s, seed)
        return product_build(c1, c2)
    if construction == "arbitrary":
        num_blocks = -(-n // (r + 1))
        short = n % (r + 1)
        good = plan_good_polynomial(field, r + 1, num_blocks, seed=seed)
        return build_arbitrary_linear(field, good.with_short_last_block(short), k)
    (rho,) = _need(event, "rho")
    b = r + rho - 1
    if n % b:
        raise ParameterError(f"block size r+rho-1 = {b} does not divide n={n}")
    good = plan_good_polynomial(field, b, n // b, seed=seed)
    return local_mds_build(field, good, k, rho)


@_handle
def handle_gen(event):
    code = generate_code(event)
    logger.info("generated %s code n=%d k=%d", code.construction, code.n, code.k)
    return code_to_spec(code)


# ===============================
# encode / repair / decode
# ===============================

def _grid_width(code):
    return code.shape[1] if code.construction == "product" else None


@_handle
def handle_encode(event):
    code = load_spec(event["spec"])
    message = parse_message(event["message"], code.field)
    if len(message) != code.k:
        raise ParameterError(f"message has length {len(message)}, expected {code.k}")
    codeword = code.encode(message)
    return {"codeword": [int(s) for s in codeword], "width": _grid_width(code)}


@_handle
def handle_repair(event):
    code = load_spec(event["spec"])
    symbols = parse_symbols(event["codeword"], code.field)
    if len(symbols) != code.n:
        raise ParameterError(f"codeword has {len(symbols)} symbols, expected {code.n}")
    position = int(event["position"])
    if not 0 <= position < code.n:
        raise ParameterError(f"position {position} outside [0, {code.n})")
    via = int(event.get("via") or 1)
    if code.construction == "product":
        value = code.repair(symbols, position, axis=via)
    elif code.construction == "multi":
        value = code.repair2(symbols, position, which=via - 1)
    else:
        if via != 1:
            raise ParameterError(f"{code.construction} codes have a single recovering set; --via must be 1")
        value = code.repair(symbols, position)
    return {"position": position, "value": int(value)}


@_handle
def handle_decode(event):
    code = load_spec(event["spec"])
    symbols = parse_symbols(event["codeword"], code.field)
    if len(symbols) != code.n:
        raise ParameterError(f"codeword has {len(symbols)} symbols, expected {code.n}")
    return {"message": [int(a) for a in erasure_decode_global(code, symbols)]}


# ===============================
# verify / bounds
# ===============================

@_handle
def handle_verify(event):
    code = load_spec(event["spec"])
    cap = event.get("exhaustive_cap")
    return run_all_checks(code, cap=int(cap) if cap else None)


@_handle
def handle_bounds(event):
    n, k, r = _need(event, "n", "k", "r")
    rho = event.get("rho")
    t = event.get("t")
    report = bound_report(n, k, r, rho=int(rho) if rho else None, t=int(t) if t else None)
    return report.to_json()


# ===============================
# click surface
# ===============================

def _emit(response, render=None, out=None):
    """Print a handler response and exit with the mapped code."""
    status = response["statusCode"]
    body = json.loads(response["body"])
    if status != 200:
        click.echo(f"error: {body['error']}", err=True)
        sys.exit(EXIT_CODES.get(status, 1))
    text = render(body) if render else json.dumps(body, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@click.group()
@click.option("--log-level", default=None, help="Logging level for stderr diagnostics (default: $LRC_LOG_LEVEL).")
def main(log_level):
    """Locally recoverable codes: generate, encode, repair, decode, verify."""
    logging.basicConfig(stream=sys.stderr, level=(log_level or config.log_level()).upper(),
                        format="%(levelname)s %(name)s: %(message)s")


@main.command("gen")
@click.option("--n", type=int, help="Code length.")
@click.option("--k", type=int, help="Dimension.")
@click.option("--r", type=int, help="Locality (first partition for --multi).")
@click.option("--q", type=int, help="Field order (a prime power).")
@click.option("--p", type=int, help="Field characteristic, with --l.")
@click.option("--l", type=int, help="Extension degree, with --p.")
@click.option("--s", type=int, help="Second locality for --multi or product codes.")
@click.option("--multi", is_flag=True, default=False, help="Two recovering sets per symbol.")
@click.option("--construction", type=click.Choice(CONSTRUCTIONS), default=None, help="Construction (default: lrc).")
@click.option("--rho", type=int, help="Local distance for local_mds codes.")
@click.option("--blocks", help="CRT block table, e.g. 4:2,4:2.")
@click.option("--example", type=click.Choice(example_names()), default=None, help="Emit a catalog code.")
@click.option("--seed", type=int, default=None, help="Seed for the good-polynomial search.")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None, help="Write the spec here.")
def gen_command(out, **flags):
    """Generate a code spec."""
    _emit(handle_gen(flags), out=out)


@main.command("encode")
@click.argument("spec", type=click.Path(exists=True, dir_okay=False))
@click.argument("message", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def encode_command(spec, message, out):
    """Encode a message file into a codeword file."""
    response = handle_encode({"spec": _read(spec), "message": _read(message)})
    _emit(response, lambda body: format_symbols(body["codeword"], body["width"]), out)


@main.command("repair")
@click.argument("spec", type=click.Path(exists=True, dir_okay=False))
@click.argument("codeword", type=click.Path(exists=True, dir_okay=False))
@click.option("--position", type=int, required=True, help="Erased position to recover.")
@click.option("--via", type=int, default=1, help="Partition (multi) or axis (product) to repair through.")
def repair_command(spec, codeword, position, via):
    """Recover one symbol from its recovering set."""
    response = handle_repair({"spec": _read(spec), "codeword": _read(codeword), "position": position, "via": via})
    _emit(response, lambda body: f"{body['value']}\n")


@main.command("decode")
@click.argument("spec", type=click.Path(exists=True, dir_okay=False))
@click.argument("codeword", type=click.Path(exists=True, dir_okay=False))
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
def decode_command(spec, codeword, out):
    """Recover the message from the surviving symbols."""
    response = handle_decode({"spec": _read(spec), "codeword": _read(codeword)})
    _emit(response, lambda body: format_message(body["message"]), out)


@main.command("verify")
@click.argument("spec", type=click.Path(exists=True, dir_okay=False))
@click.option("--exhaustive-cap", type=int, default=None, help="Largest q^k to enumerate (default: $LRC_EXHAUSTIVE_CAP).")
def verify_command(spec, exhaustive_cap):
    """Measure distance and certify locality; prints a JSON report."""
    _emit(handle_verify({"spec": _read(spec), "exhaustive_cap": exhaustive_cap}))


@main.command("bounds")
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True)
@click.option("--r", type=int, required=True)
@click.option("--rho", type=int, default=None)
@click.option("--t", type=int, default=None)
def bounds_command(n, k, r, rho, t):
    """Print the closed-form bounds for (n, k, r)."""
    _emit(handle_bounds({"n": n, "k": k, "r": r, "rho": rho, "t": t}))


if __name__ == "__main__":
    main()
