"""Shared test utilities: tolerance asserts and a generator of random
positive-valued composite expressions for oracle comparisons."""

import random

from prodgeo import jets
from prodgeo.jets import Jet2


def assert_close(actual, expected, rtol, label=""):
    err = abs(actual - expected)
    bound = rtol * (1.0 + abs(expected))
    assert err <= bound, (
        f"{label}: {actual!r} vs {expected!r} (err {err:.3e} > bound {bound:.3e})")


def random_expression(rng: random.Random, max_depth: int = 4):
    """A random composite expression over the jet operation set.

    Built so that every subexpression stays strictly positive on the
    positive quadrant, keeping powr/ln/sqrt inside their domains.
    Returns a callable (Jet2, Jet2) -> Jet2.
    """

    def build(depth):
        if depth >= max_depth or rng.random() < 0.25:
            leaf = rng.choice(("u", "v", "c"))
            if leaf == "u":
                return lambda u, v: u
            if leaf == "v":
                return lambda u, v: v
            c = rng.uniform(0.5, 2.0)
            return lambda u, v: jets.constant(c)
        op = rng.choice(("add", "mul", "div", "powr", "sqrt", "ln1p", "expneg"))
        a = build(depth + 1)
        if op in ("add", "mul", "div"):
            b = build(depth + 1)
            fn = {"add": jets.add, "mul": jets.mul, "div": jets.div}[op]
            return lambda u, v: fn(a(u, v), b(u, v))
        if op == "powr":
            p = rng.uniform(-1.5, 2.5)
            return lambda u, v: jets.powr(a(u, v), p)
        if op == "sqrt":
            return lambda u, v: jets.sqrt(a(u, v))
        if op == "ln1p":
            return lambda u, v: jets.ln(jets.add(a(u, v), jets.constant(1.0)))
        c = rng.uniform(0.1, 0.5)
        return lambda u, v: jets.exp(jets.scale(a(u, v), -c))

    return build(0)


def tame_expression(rng: random.Random, u0: float, v0: float,
                    val_cap: float = 50.0, deriv_cap: float = 1e3):
    """A random expression whose value and derivatives are moderate at
    (u0, v0), so finite differences are trustworthy there."""
    while True:
        expr = random_expression(rng)
        jet = expr(*jets.seed(u0, v0))
        if abs(jet.val) <= val_cap and all(abs(s) <= deriv_cap for s in jet):
            return expr


def as_scalar_field(expr):
    """Adapt a jet expression to a plain (float, float) -> float field."""
    return lambda u, v: expr(jets.constant(u), jets.constant(v)).val
