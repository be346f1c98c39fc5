#!/usr/bin/env python3
"""Trivial slots, minimal reduction, and how corruption breaks exactness.

Padding inserts non-integer slots that carry no mobile dimension (the new
spaces are the outgoing limits of their left neighbours); exactness
survives, minimality does not, and reduction forgets exactly the padding.
Corrupting one slot instead keeps compatibility but destroys exactness,
which the chain construction then refuses with the same failing pair the
exactness check reports.
"""

from nodalseries import (
    ChainBuildError,
    build_chain,
    check_exact,
    corrupt_exactness,
    numerical_data,
    pad_with_trivial_slots,
    random_exact_lls,
    reduce_minimal,
)
from nodalseries.linalg import format_rational

g = random_exact_lls(d=2, r=1, delta=(2, 1), seed=7)
print("original ladder steps:", g.delta.steps, "mobile:", numerical_data(g).mobile)

padded = pad_with_trivial_slots(g, (4, 2), seed=1)
data = numerical_data(padded)
print("padded ladder steps:  ", padded.delta.steps, "mobile:", data.mobile)
print("padded still exact:   ", check_exact(padded).passed)
print("padded minimal:       ", data.is_minimal())

reduced = reduce_minimal(padded)
print("reduction undoes it:  ", reduced == g)
print("reduction idempotent: ", reduce_minimal(reduced) == reduced)
print()

bad = corrupt_exactness(g, seed=3)
report = check_exact(bad)
left, right = report.first_failing_pair()
print("corrupted series exact:", report.passed)
print("first failing pair:    ", (format_rational(left), format_rational(right)))
try:
    build_chain(bad)
except ChainBuildError as exc:
    pair = tuple(format_rational(i) for i in exc.failing_pair)
    print("chain construction refuses at the same pair:", pair)
