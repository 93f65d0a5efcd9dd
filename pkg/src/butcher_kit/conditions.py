"""Order conditions for s-stage one-step methods, generated from trees.

For a tree t with children t_1, ..., t_n the elementary weight vector is

    Phi_i(t) = prod_k ( sum_j a[i,j] * Phi_j(t_k) ),   i = 1..s,

with Phi(single node) = all ones, and the scalar elementary weight is
sum_i b[i] * Phi_i(t).  A method has order p exactly when every tree of
order <= p satisfies  weight(t) == 1/tree_factorial(t).

GenerationFlags tune the emitted shape:
  * substitute_c: a child that is the single node contributes the factor
    c[i] instead of sum_j a[i,j] (the row-sum convention, presentation
    form used in printed condition tables);
  * explicit: terms a[i,j] with i <= j are dropped at emission and c[1]
    becomes 0 (strictly lower triangular tableau).

Both forms describe the same conditions: binding c[i] to its row sum turns
the substitute_c polynomial into the raw one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .algebra import CoeffPolynomial, a_var, b_var, c_var, format_rational, poly_sum
from .trees import RootedTree, enumerate_by_leaf, format_tree, single_node, tree_factorial

__all__ = [
    "GenerationFlags",
    "OrderCondition",
    "elementary_weight_vector",
    "elementary_weight",
    "order_condition",
    "all_order_conditions",
    "render_generic",
    "INDEX_NAMES",
]


@dataclass(frozen=True)
class GenerationFlags:
    explicit: bool = False
    substitute_c: bool = False


_DEFAULT_FLAGS = GenerationFlags()


@dataclass(frozen=True)
class OrderCondition:
    """One equation weight(tree) == 1/tree_factorial(tree)."""

    tree: RootedTree
    lhs: CoeffPolynomial
    rhs: Fraction

    @property
    def order(self) -> int:
        return self.tree.order

    @property
    def unsatisfiable(self) -> bool:
        # A zero left side with a nonzero right side can never hold; such
        # conditions are kept to mark the order barrier.
        return self.lhs.is_zero and self.rhs != 0

    def render(self, style: str = "plain") -> str:
        if style == "plain":
            return f"{self.lhs.render('plain')} == {format_rational(self.rhs)}"
        if style == "latex":
            rhs = CoeffPolynomial.constant(self.rhs).render("latex")
            return f"{self.lhs.render('latex')} = {rhs}"
        raise ValueError(f"unknown render style: {style!r}")

    def __str__(self) -> str:
        return self.render()


def elementary_weight_vector(
    tree: RootedTree, stages: int, flags: GenerationFlags = _DEFAULT_FLAGS
) -> tuple[CoeffPolynomial, ...]:
    """Per-stage weight polynomials (Phi_1(t), ..., Phi_s(t))."""
    if stages < 1:
        raise ValueError("stages must be >= 1")
    return _weight_vector(tree, stages, flags, {})


def _weight_vector(
    tree: RootedTree,
    stages: int,
    flags: GenerationFlags,
    memo: dict[RootedTree, tuple[CoeffPolynomial, ...]],
) -> tuple[CoeffPolynomial, ...]:
    cached = memo.get(tree)
    if cached is not None:
        return cached
    leaf = single_node()
    components = []
    for i in range(1, stages + 1):
        component = CoeffPolynomial.constant(1)
        for kid in tree.children:
            if flags.substitute_c and kid == leaf:
                if flags.explicit and i == 1:
                    factor = CoeffPolynomial.zero()
                else:
                    factor = CoeffPolynomial.variable(c_var(i))
            else:
                kid_vector = _weight_vector(kid, stages, flags, memo)
                last_j = i - 1 if flags.explicit else stages
                factor = poly_sum(
                    CoeffPolynomial.variable(a_var(i, j)) * kid_vector[j - 1]
                    for j in range(1, last_j + 1)
                )
            component = component * factor
        components.append(component)
    result = tuple(components)
    memo[tree] = result
    return result


def elementary_weight(
    tree: RootedTree, stages: int, flags: GenerationFlags = _DEFAULT_FLAGS
) -> CoeffPolynomial:
    """sum_i b[i] * Phi_i(t), fully expanded."""
    vector = elementary_weight_vector(tree, stages, flags)
    return poly_sum(
        CoeffPolynomial.variable(b_var(i)) * vector[i - 1] for i in range(1, stages + 1)
    )


def order_condition(
    tree: RootedTree, stages: int, flags: GenerationFlags = _DEFAULT_FLAGS
) -> OrderCondition:
    return OrderCondition(
        tree=tree,
        lhs=elementary_weight(tree, stages, flags),
        rhs=Fraction(1, tree_factorial(tree)),
    )


def all_order_conditions(
    max_order: int, stages: int, flags: GenerationFlags = _DEFAULT_FLAGS
) -> tuple[OrderCondition, ...]:
    """Conditions for every tree of order <= max_order, canonical order.

    Duplicates (identical lhs and rhs after flag substitutions) are dropped,
    keeping the first tree that produced the equation.  Unsatisfiable
    conditions (lhs 0, rhs nonzero) are kept.
    """
    seen: set[tuple[CoeffPolynomial, Fraction]] = set()
    out: list[OrderCondition] = []
    for tree in enumerate_by_leaf(max_order):
        condition = order_condition(tree, stages, flags)
        key = (condition.lhs, condition.rhs)
        if key not in seen:
            seen.add(key)
            out.append(condition)
    return tuple(out)


# Index names by depth for the symbolic-s rendering; depth is capped by the
# alphabet length, deeper trees raise.
INDEX_NAMES = ("i", "j", "k", "l", "m", "p", "q", "r", "u", "v", "w")


def render_generic(tree: RootedTree) -> str:
    """Nested-sum text of the weight for symbolic stage count s.

    The single node renders as "sum_{i=1}^{s} b_i"; every child contributes
    a parenthesized factor one index deeper, and repeated children group
    into a power.
    """
    return " ".join(["sum_{i=1}^{s} b_i"] + _generic_factors(tree, 0))


def _generic_factors(tree: RootedTree, depth: int) -> list[str]:
    if not tree.children:
        return []
    if depth + 1 >= len(INDEX_NAMES):
        raise ValueError(
            f"tree deeper than the {len(INDEX_NAMES)}-name index alphabet"
        )
    parent, child = INDEX_NAMES[depth], INDEX_NAMES[depth + 1]
    factors = []
    for kid, run in groupby(tree.children):
        multiplicity = len(tuple(run))
        head = f"sum_{{{child}=1}}^{{s}} a_{{{parent},{child}}}"
        inner = " ".join([head] + _generic_factors(kid, depth + 1))
        factors.append(f"({inner})" + (f"^{multiplicity}" if multiplicity > 1 else ""))
    return factors
