"""Execute parsed ``.cca`` scripts and serialise their reports."""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional

from . import closures, detectors, idealops, multiplicity
from .coeffs import DEFAULT_PRIME, GF, QQ, Field, field_from_name
from .dsl import (
    Assert,
    BinOp,
    Call,
    Define,
    ListExpr,
    Name,
    Neg,
    Num,
    Pow,
    ReportStmt,
    Script,
    Str,
    format_statement,
)
from .errors import ClosureLabError, UnstabilizedError, UnsupportedError, UsageError
from .idealops import Ideal
from .polyring import Polynomial, Ring, make_ring
from .report import FAILS, HOLDS, UNSUPPORTED, Report, _jsonable

FORMAT_VERSION = "1"
COMPUTED = "computed"
ERROR = "error"


@dataclass
class RunConfig:
    field: str = "q"
    prime: int = DEFAULT_PRIME
    seed: int = 0
    window: int = closures.LIM_WINDOW
    max_n: Optional[int] = None  # None: the per-routine defaults
    output: str = "text"
    policy: str = "halt"

    def __post_init__(self):
        if self.field not in ("q", "fp"):
            raise UsageError(f"field must be 'q' or 'fp', got {self.field!r}")
        if self.output not in ("text", "json"):
            raise UsageError(f"output must be 'text' or 'json', got {self.output!r}")
        if self.policy not in ("halt", "collect"):
            raise UsageError(f"policy must be 'halt' or 'collect', got {self.policy!r}")
        caps = {"prime": self.prime, "window": self.window, "max_n": self.max_n}
        for name, value in caps.items():
            if value is not None and value < 1:
                raise UsageError(f"{name} must be positive")
        if self.field == "fp":
            GF(self.prime)  # rejects composite characteristics

    @property
    def base_field(self) -> Field:
        return QQ if self.field == "q" else GF(self.prime)

    @property
    def lim_max_n(self) -> int:
        return self.max_n if self.max_n is not None else closures.LIM_MAX_N

    @property
    def hs_max_n(self) -> int:
        return self.max_n if self.max_n is not None else multiplicity.HS_MAX_N

    def to_dict(self) -> dict:
        return asdict(self)


class ScriptError(ClosureLabError):
    """Engine error raised while executing a statement, tagged with its location."""

    def __init__(self, message: str, loc, statement: str, partial=None):
        super().__init__(f"{loc}: {message}")
        self.loc = loc
        self.statement = statement
        self.bare = message
        self.partial = partial


@dataclass
class RunResult:
    reports: list
    exit_code: int
    config: RunConfig
    error: Optional[str] = None

    @property
    def failed(self) -> list:
        return [r for r in self.reports if r["verdict"] == FAILS and r["kind"] == "assert"]

    def document(self) -> dict:
        doc = {
            "version": FORMAT_VERSION,
            "seed": self.config.seed,
            "config": self.config.to_dict(),
            "reports": self.reports,
            "exit_code": self.exit_code,
        }
        if self.error is not None:
            doc["error"] = self.error
        return doc

    def to_json(self) -> str:
        return json.dumps(self.document(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"{r['location']}  {r['verdict']:<12} {_text_line(r)}" for r in self.reports]
        if self.error:
            lines.append(f"error: {self.error}")
        return "\n".join(lines) + "\n"


def _text_line(r: dict) -> str:
    q = r["quantities"]
    if r["kind"] == "assert":
        body = r["statement"]
        if r["verdict"] == FAILS:
            body += f"   expected {q.get('expected')!r}, computed {q.get('computed')!r}"
        return body
    bits = ", ".join(f"{k}={v}" for k, v in q.items())
    text = r["statement"]
    if r.get("conclusion"):
        text += f"   -> {r['conclusion']}"
    return text + (f"   [{bits}]" if bits else "")


class FlaggedInt(int):
    """An integer returned together with a caveat for the report."""

    flag: str = ""

    def __new__(cls, value, flag):
        obj = super().__new__(cls, value)
        obj.flag = flag
        return obj


# -- evaluation -----------------------------------------------------------------

class Evaluator:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.env: dict = {}
        self.rng = random.Random(cfg.seed)
        # variables of the most recently defined ring are in scope at top level
        self.current: Ring | None = None

    # values ------------------------------------------------------------------------
    def eval(self, node, ctx: Ring | None = None):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Str):
            return node.value
        if isinstance(node, Name):
            return self.lookup(node, ctx)
        if isinstance(node, ListExpr):
            return [self.eval(x, ctx) for x in node.items]
        if isinstance(node, Neg):
            return _neg(self.eval(node.operand, ctx))
        if isinstance(node, Pow):
            return _pow(self.eval(node.base, ctx), node.exp)
        if isinstance(node, BinOp):
            return _binop(node.op, self.eval(node.left, ctx), self.eval(node.right, ctx))
        if isinstance(node, Call):
            fn = BUILTINS.get(node.func)
            if fn is None:
                raise UsageError(f"unknown function {node.func!r}")
            return fn(self, node, ctx)
        raise UsageError(f"cannot evaluate {node!r}")

    def lookup(self, node: Name, ctx: Ring | None):
        name = node.id
        if ctx is not None and name in ctx.names:
            return ctx.var(name)
        if name in self.env:
            return self.env[name]
        constants = {"true": True, "false": False, "Q": QQ, "QQ": QQ,
                     "k": self.cfg.base_field, "Fp": GF(self.cfg.prime)}
        if name in constants:
            return constants[name]
        where = "" if ctx is None else f" in {ctx.name or ctx.describe()}"
        raise UsageError(f"undefined name {name!r}{where}")

    def args(self, call: Call, ctx: Ring | None, raw: tuple = ()):
        """Evaluate arguments left to right; a Ring or Ideal sets the ring context for later ones."""
        out = []
        for i, a in enumerate(call.args):
            if i in raw:
                out.append(a)
                continue
            v = self.eval(a, ctx)
            if isinstance(v, Ring):
                ctx = v
            elif isinstance(v, Ideal):
                ctx = v.ring
            out.append(v)
        kw = {k: self.eval(v, ctx) for k, v in call.kwargs}
        return out, kw, ctx


def _neg(v):
    if isinstance(v, (int, Fraction, Polynomial)) and not isinstance(v, bool):
        return -v
    raise UsageError(f"cannot negate {_kind(v)}")


def _pow(v, n: int):
    if isinstance(v, Ideal):
        return idealops.ideal_power(v, n)
    if isinstance(v, (int, Fraction, Polynomial)) and not isinstance(v, bool):
        return v ** n
    raise UsageError(f"cannot raise {_kind(v)} to a power")


def _binop(op: str, a, b):
    a, b = _plain(a), _plain(b)
    if isinstance(a, Ideal) or isinstance(b, Ideal):
        if not (isinstance(a, Ideal) and isinstance(b, Ideal)):
            raise UsageError(f"cannot combine {_kind(a)} and {_kind(b)} with {op!r}")
        if op == "+":
            return idealops.ideal_sum(a, b)
        if op == "*":
            return idealops.ideal_product(a, b)
        raise UsageError(f"operator {op!r} is not defined on ideals")
    for v in (a, b):
        if isinstance(v, bool) or not isinstance(v, (int, Fraction, Polynomial)):
            raise UsageError(f"operator {op!r} is not defined on {_kind(v)}")
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if isinstance(b, Polynomial):
        if not b.is_constant() or b.is_zero():
            raise UsageError("division only by nonzero constants")
        P, c = b.ring, b.coefficient((0,) * b.ring.ngens).value
    elif b == 0:
        raise UsageError("division by zero")
    elif isinstance(a, Polynomial):
        P, c = a.ring, a.ring.field.convert(b)
    else:
        return Fraction(a, b)
    a = a if isinstance(a, Polynomial) else P.constant(a)
    return a * _scalar(P, P.field.inv(c))


def _scalar(P, value):
    return P.from_dict({(0,) * P.ngens: value})


def _plain(v):
    if isinstance(v, closures.ClosureResult):
        return v.closure
    if isinstance(v, multiplicity.MultiplicityResult):
        return v.value
    return v


def _kind(v) -> str:
    return type(v).__name__


# -- coercions used by builtins ------------------------------------------------------

def _ring(v) -> Ring:
    if isinstance(v, Ring):
        return v
    raise UsageError(f"expected a ring, got {_kind(v)}")


def _ideal(v) -> Ideal:
    v = _plain(v)
    if isinstance(v, Ideal):
        return v
    raise UsageError(f"expected an ideal, got {_kind(v)}")


def _poly(ring: Ring, v) -> Polynomial:
    if isinstance(v, bool):
        raise UsageError("expected a polynomial, got a boolean")
    if isinstance(v, Polynomial):
        if v.ring != ring.ambient:
            raise UsageError(f"{v} does not belong to {ring.describe()}")
        return v
    if isinstance(v, (int, Fraction)):
        return ring.ambient.constant(v)
    raise UsageError(f"expected a polynomial, got {_kind(v)}")


def _seq(ring: Ring, v) -> list:
    if not isinstance(v, (list, multiplicity.Reduction)):
        raise UsageError(f"expected a list of elements, got {_kind(v)}")
    return [_poly(ring, f) for f in v]


def _flag(kw: dict, key: str) -> bool:
    v = kw.get(key, False)
    if not isinstance(v, bool):
        raise UsageError(f"{key} must be true or false")
    return v


def _int_kw(kw: dict, key: str, default: int) -> int:
    v = kw.get(key, default)
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise UsageError(f"{key} must be a positive integer")
    return v


def _field(v) -> Field:
    if isinstance(v, Field):
        return v
    if isinstance(v, str):
        return field_from_name(v)
    raise UsageError(f"expected a field, got {_kind(v)}")


def _declared_names(node) -> list:
    if not isinstance(node, ListExpr) or not all(isinstance(x, Name) for x in node.items):
        raise UsageError("expected a list of variable names")
    names = [x.id for x in node.items]
    if len(set(names)) != len(names):
        raise UsageError("variable names must be distinct")
    return names


def _int_list(v, what: str) -> list:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise UsageError(f"{what} must be a list of integers")
    return v


# -- builtins ---------------------------------------------------------------------------

BUILTINS: dict = {}


def builtin(name):
    def register(fn):
        BUILTINS[name] = fn
        return fn
    return register


@builtin("GF")
def _b_gf(ev, call, ctx):
    (p,), _, _ = ev.args(call, ctx)
    return GF(p)


@builtin("poly")
def _b_poly(ev, call, ctx):
    (K, names), kw, _ = ev.args(call, ctx, raw=(1,))
    names = _declared_names(names)
    weights = kw.get("weights")
    if weights is not None:
        weights = _int_list(weights, "weights")
    return make_ring(_field(K), names, weights)


@builtin("toric")
def _b_toric(ev, call, ctx):
    args, _, _ = ev.args(call, ctx, raw=(2,))
    K, vectors = args[0], args[1]
    if not isinstance(vectors, list) or not vectors:
        raise UsageError("toric needs a nonempty list of exponent vectors")
    vectors = [_int_list(v, "exponent vector") for v in vectors]
    names = _declared_names(args[2]) if len(args) > 2 else None
    return idealops.toric_ring(_field(K), vectors, names)


@builtin("quotient")
def _b_quotient(ev, call, ctx):
    (first, second), _, _ = ev.args(call, ctx)
    if isinstance(first, Ring):
        rels = list(_ideal(second).gens) if not isinstance(second, list) else [_poly(first, f) for f in second]
        if not first.is_polynomial_ring():
            rels = list(first.relations) + rels
        return make_ring(first.field, first.names, first.weights, rels)
    A = _ideal(first)
    if isinstance(second, Ideal):
        return idealops.ideal_colon_ideal(A, second)
    return idealops.ideal_quotient(A, _poly(A.ring, second))


@builtin("ideal")
def _b_ideal(ev, call, ctx):
    if call.args and isinstance(call.args[0], Name) and isinstance(ev.env.get(call.args[0].id), Ring):
        ring = ev.env[call.args[0].id]
        gens = [ev.eval(a, ring) for a in call.args[1:]]
    elif ctx is not None:
        ring = ctx
        gens = [ev.eval(a, ring) for a in call.args]
    else:
        raise UsageError("ideal(...) needs a ring: ideal(R, generators...)")
    flat = []
    for g in gens:
        flat.extend(g if isinstance(g, list) else [g])
    return idealops.ideal(ring, [_poly(ring, g) for g in flat])


@builtin("maximal")
def _b_maximal(ev, call, ctx):
    (R,), _, _ = ev.args(call, ctx)
    return idealops.maximal_ideal(_ring(R))


@builtin("unit")
def _b_unit(ev, call, ctx):
    (R,), _, _ = ev.args(call, ctx)
    return idealops.unit_ideal(_ring(R))


@builtin("zero")
def _b_zero(ev, call, ctx):
    (R,), _, _ = ev.args(call, ctx)
    return idealops.zero_ideal(_ring(R))


def _two_ideals(ev, call, ctx):
    (a, b), _, _ = ev.args(call, ctx)
    return _ideal(a), _ideal(b)


@builtin("sum")
def _b_sum(ev, call, ctx):
    return idealops.ideal_sum(*_two_ideals(ev, call, ctx))


@builtin("product")
def _b_product(ev, call, ctx):
    return idealops.ideal_product(*_two_ideals(ev, call, ctx))


@builtin("intersect")
def _b_intersect(ev, call, ctx):
    return idealops.ideal_intersection(*_two_ideals(ev, call, ctx))


@builtin("power")
def _b_power(ev, call, ctx):
    (A, n), _, _ = ev.args(call, ctx)
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise UsageError("power needs a nonnegative integer exponent")
    return idealops.ideal_power(_ideal(A), n)


@builtin("colon")
def _b_colon(ev, call, ctx):
    (A, B), _, _ = ev.args(call, ctx)
    A = _ideal(A)
    if isinstance(_plain(B), Ideal):
        return idealops.ideal_colon_ideal(A, _plain(B))
    return idealops.ideal_quotient(A, _poly(A.ring, B))


@builtin("saturate")
def _b_saturate(ev, call, ctx):
    (A, f), _, _ = ev.args(call, ctx)
    A = _ideal(A)
    return idealops.saturation(A, _poly(A.ring, f))[0]


@builtin("saturation_exponent")
def _b_sat_exp(ev, call, ctx):
    (A, f), _, _ = ev.args(call, ctx)
    A = _ideal(A)
    return idealops.saturation(A, _poly(A.ring, f))[1]


@builtin("contains")
def _b_contains(ev, call, ctx):
    (A, f), _, _ = ev.args(call, ctx)
    A = _ideal(A)
    return A.contains(_poly(A.ring, f))


@builtin("subset")
def _b_subset(ev, call, ctx):
    return idealops.is_subideal(*_two_ideals(ev, call, ctx))


@builtin("equal")
def _b_equal(ev, call, ctx):
    return idealops.ideal_equal(*_two_ideals(ev, call, ctx))


@builtin("dim")
def _b_dim(ev, call, ctx):
    (v,), _, _ = ev.args(call, ctx)
    if isinstance(v, Ring):
        return v.dim
    A = _ideal(v)
    if A.is_unit():
        return FlaggedInt(-1, "dimension of zero ring")
    return idealops.dimension(A)


@builtin("colength")
def _b_colength(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    return idealops.colength(_ideal(A))


@builtin("standard_monomials")
def _b_standard(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    A = _ideal(A)
    P = A.ring.ambient
    return [P.monomial(m) for m in idealops.standard_basis(A)]


@builtin("minimal_primes")
def _b_minprimes(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    return idealops.minimal_primes_monomial(_ideal(A))


@builtin("is_sop")
def _b_is_sop(ev, call, ctx):
    (R, seq), _, _ = ev.args(call, ctx)
    R = _ring(R)
    return idealops.is_system_of_parameters(R, _seq(R, seq))


@builtin("infty")
def _b_infty(ev, call, ctx):
    (R, seq), _, _ = ev.args(call, ctx)
    R = _ring(R)
    return closures.infty_ideal(R, _seq(R, seq))


@builtin("lim")
def _b_lim(ev, call, ctx):
    (R, seq), kw, _ = ev.args(call, ctx)
    R = _ring(R)
    window = _int_kw(kw, "window", ev.cfg.window)
    max_n = _int_kw(kw, "max_n", ev.cfg.lim_max_n)
    return closures.limit_closure(R, _seq(R, seq), window, max_n)


@builtin("closure")
def _b_closure(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    return closures.integral_closure(_ideal(A))


@builtin("is_integrally_closed")
def _b_is_closed(ev, call, ctx):
    (A,), kw, _ = ev.args(call, ctx)
    status = closures.integral_closedness(_ideal(A), _flag(kw, "assume_equidim"),
                                          ev.cfg.hs_max_n, ev.cfg.window)
    return status.closed


@builtin("rees")
def _b_rees(ev, call, ctx):
    (A, f), kw, _ = ev.args(call, ctx)
    A = _ideal(A)
    return closures.rees_membership(_poly(A.ring, f), A, _flag(kw, "assume_equidim"),
                                    ev.cfg.hs_max_n, ev.cfg.window)


@builtin("in_closure")
def _b_in_closure(ev, call, ctx):
    (A, f), kw, _ = ev.args(call, ctx)
    A = _ideal(A)
    return closures.closure_membership(_poly(A.ring, f), A, _flag(kw, "assume_equidim"),
                                       ev.cfg.hs_max_n, ev.cfg.window)


@builtin("mult")
def _b_mult(ev, call, ctx):
    (A,), kw, _ = ev.args(call, ctx)
    return multiplicity.mult_hs(_ideal(A), _int_kw(kw, "max_n", ev.cfg.hs_max_n),
                                _int_kw(kw, "window", ev.cfg.window))


@builtin("mult_param")
def _b_mult_param(ev, call, ctx):
    (R, seq), _, _ = ev.args(call, ctx)
    R = _ring(R)
    return multiplicity.mult_param(R, _seq(R, seq))


@builtin("additivity")
def _b_additivity(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    return multiplicity.additivity_check(_ideal(A), ev.cfg.hs_max_n, ev.cfg.window)


@builtin("reduction")
def _b_reduction(ev, call, ctx):
    (A,), _, _ = ev.args(call, ctx)
    return multiplicity.random_reduction(_ideal(A), ev.rng, max_n=ev.cfg.hs_max_n, window=ev.cfg.window)


@builtin("check_inequality")
def _b_check_inequality(ev, call, ctx):
    (A,), kw, _ = ev.args(call, ctx)
    return detectors.check_inequality(_ideal(A), _flag(kw, "assume_equidim"), _flag(kw, "assume_closed"),
                                      ev.cfg.hs_max_n, ev.cfg.window)


@builtin("check_cm_via_lim")
def _b_check_cm(ev, call, ctx):
    (R, seq), kw, _ = ev.args(call, ctx)
    R = _ring(R)
    return detectors.check_cm_via_lim(R, _seq(R, seq), _flag(kw, "assume_unmixed"), ev.cfg.window,
                                      ev.cfg.lim_max_n, ev.cfg.hs_max_n, ev.cfg.window)


@builtin("check_chain")
def _b_check_chain(ev, call, ctx):
    (R, seq), kw, _ = ev.args(call, ctx)
    R = _ring(R)
    return detectors.check_chain(R, _seq(R, seq), _flag(kw, "assume_equidim"), ev.cfg.window,
                                 ev.cfg.lim_max_n, ev.cfg.hs_max_n, ev.cfg.window)


@builtin("check_regular")
def _b_check_regular(ev, call, ctx):
    args, kw, _ = ev.args(call, ctx)
    R = _ring(args[0])
    A = _ideal(args[1]) if len(args) > 1 else None
    return detectors.check_regular(R, A, _flag(kw, "assume_unmixed"), ev.cfg.hs_max_n, ev.cfg.window)


@builtin("check_f_rational")
def _b_check_f_rational(ev, call, ctx):
    return detectors.check_f_rational()


# -- rendering --------------------------------------------------------------------------

def render(v):
    """JSON-friendly rendering of a DSL value."""
    v = _plain(v)
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return int(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, Ring):
        return v.describe()
    if isinstance(v, (Ideal, Polynomial, Field)):
        return str(v)
    if isinstance(v, multiplicity.Reduction):
        return [str(f) for f in v.seq]
    if isinstance(v, (list, tuple)):
        return [render(x) for x in v]
    if isinstance(v, Report):
        return v.conclusion or v.verdict
    return _jsonable(v)


def _value_quantities(v) -> dict:
    if isinstance(v, closures.ClosureResult):
        q = {"value": str(v.closure), "method": v.method}
        if not v.closure.is_unit():
            q["colength"] = idealops.colength(v.closure) if idealops.is_m_primary(v.closure) else None
        q.update({k: _jsonable(x) for k, x in v.diagnostics.items()})
        return q
    if isinstance(v, multiplicity.MultiplicityResult):
        q = {"value": v.value, "method": v.method}
        q.update({k: _jsonable(x) for k, x in v.diagnostics.items()})
        return q
    if isinstance(v, multiplicity.Reduction):
        return {"value": render(v), "coefficients": _jsonable(v.coefficients),
                "attempts": v.attempts, "multiplicity": v.multiplicity}
    q = {"value": render(v)}
    if isinstance(v, FlaggedInt):
        q["flag"] = v.flag
    return q


def _entry(kind: str, st, verdict: str, quantities: dict, hypotheses=None, witnesses=None, **extra) -> dict:
    entry = {
        "kind": kind,
        "statement": format_statement(st),
        "location": str(st.loc) if st.loc else "",
        "quantities": quantities,
        "verdict": verdict,
        "hypotheses": hypotheses or {},
        "witnesses": witnesses or [],
    }
    entry.update(extra)
    return entry


def _report_entry(st, v) -> dict:
    if isinstance(v, Report):
        d = v.to_dict()
        return _entry("report", st, d["verdict"], d["quantities"], d["hypotheses"], d["witnesses"],
                      check=d["check"], ring=d["ring"], input=d["input"],
                      conclusion=d["conclusion"], notes=d["notes"])
    return _entry("report", st, COMPUTED, _value_quantities(v))


def _compare(lhs, rhs) -> tuple:
    """(equal?, witnesses) after normalising both sides."""
    lhs, rhs = _plain(lhs), _plain(rhs)
    if isinstance(lhs, Report) and isinstance(rhs, str):
        return rhs in (lhs.verdict, lhs.conclusion), []
    if isinstance(lhs, Ideal) and isinstance(rhs, Ideal):
        if lhs.ring != rhs.ring:
            raise UsageError("compared ideals live in different rings")
        if lhs == rhs:
            return True, []
        wit = [g for g in lhs.gens if not rhs.contains(g)] + [g for g in rhs.gens if not lhs.contains(g)]
        return False, [str(g) for g in wit]
    if isinstance(lhs, Polynomial) or isinstance(rhs, Polynomial):
        P = lhs.ring if isinstance(lhs, Polynomial) else rhs.ring
        a = lhs if isinstance(lhs, Polynomial) else P.constant(lhs)
        b = rhs if isinstance(rhs, Polynomial) else P.constant(rhs)
        return a == b, []
    if isinstance(lhs, (list, tuple)) and isinstance(rhs, (list, tuple)):
        if len(lhs) != len(rhs):
            return False, []
        return all(_compare(a, b)[0] for a, b in zip(lhs, rhs)), []
    if isinstance(lhs, bool) != isinstance(rhs, bool):
        raise UsageError(f"cannot compare {_kind(lhs)} with {_kind(rhs)}")
    return lhs == rhs, []


def _assert_entry(ev: Evaluator, st: Assert) -> dict:
    lhs = ev.eval(st.expr, ev.current)
    if st.op is None:
        value = _plain(lhs)
        if isinstance(value, Report):
            ok = value.verdict == HOLDS
        elif isinstance(value, bool):
            ok = value
        else:
            raise UsageError(f"assert without comparison needs a boolean, got {_kind(value)}")
        return _entry("assert", st, HOLDS if ok else FAILS, {"computed": render(value), "expected": True})
    rhs = ev.eval(st.rhs, ev.current)
    equal, witnesses = _compare(lhs, rhs)
    ok = equal if st.op == "==" else not equal
    q = {"computed": render(lhs), "expected": render(rhs) if st.op == "==" else f"not {render(rhs)}"}
    return _entry("assert", st, HOLDS if ok else FAILS, q, witnesses=witnesses if not ok else [])


def run_script(script: Script, cfg: RunConfig | None = None) -> RunResult:
    """Execute ``script`` statement by statement.

    One entry per ``assert``/``report`` statement.  Exit codes: 0 all assertions
    hold, 1 an assertion failed, 2 an engine error stopped the run.  With
    ``policy="halt"`` the first failed assertion stops execution.
    """
    cfg = cfg or RunConfig()
    ev = Evaluator(cfg)
    entries: list = []
    failed = False
    for st in script.statements:
        try:
            if isinstance(st, Define):
                value = _bind(st, ev.eval(st.expr, ev.current))
                ev.env[st.name] = value
                if isinstance(value, Ring):
                    ev.current = value
            elif isinstance(st, ReportStmt):
                entries.append(_report_entry(st, ev.eval(st.expr, ev.current)))
            elif isinstance(st, Assert):
                entry = _assert_entry(ev, st)
                entries.append(entry)
                if entry["verdict"] == FAILS:
                    failed = True
                    if cfg.policy == "halt":
                        break
        except UnsupportedError as exc:
            entries.append(_entry("report" if not isinstance(st, Assert) else "assert", st, UNSUPPORTED,
                                  {}, conclusion=str(exc)))
            if isinstance(st, Assert):
                failed = True
                if cfg.policy == "halt":
                    break
        except (ClosureLabError, ZeroDivisionError) as exc:
            partial = getattr(exc, "partial", None)
            quantities = {"error": type(exc).__name__}
            if isinstance(exc, UnstabilizedError):
                quantities["status"] = "unstabilized"
            if partial:
                quantities["partial"] = _jsonable(partial)
            entries.append(_entry("error", st, ERROR, quantities, conclusion=str(exc)))
            err = ScriptError(str(exc), st.loc, format_statement(st), partial)
            return RunResult(entries, 2, cfg, str(err))
    return RunResult(entries, 1 if failed else 0, cfg)


def _bind(st: Define, value):
    if st.kind == "ring":
        if not isinstance(value, Ring):
            raise UsageError(f"'ring {st.name}' must be bound to a ring, got {_kind(value)}")
        value.name = value.name or st.name
    elif st.kind == "ideal":
        value = _plain(value)
        if not isinstance(value, Ideal):
            raise UsageError(f"'ideal {st.name}' must be bound to an ideal, got {_kind(value)}")
    return value
