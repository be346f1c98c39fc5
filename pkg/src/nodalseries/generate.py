"""Seeded random instance generation.

Exact series are generated profile-first: a feasible assignment of mobile
dimensions along the ladder is sampled, then realized by forward
propagation. Each space is built from the previous one as a graph over its
first-block part plus the embedded second-block image, which makes the
linking equalities hold by construction; randomness enters through the
kernel choices and the graph images. Rejection happens only on the cheap
generic-position checks, never on the linking conditions themselves.

All randomness flows from one integer seed through per-stage substreams, so
every failure is reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .curve import CurveModel, section_space
from .delta import DeltaSet, build_delta
from .linalg import Subspace, zero_coordinate_section
from .series import (
    LimitLinearSeries,
    check_compatible,
    check_exact,
    membership_failures,
    numerical_data,
)
from .torus import (
    Direction,
    TorusSplit,
    block_profile,
    embed_block,
    is_fixed,
    limit,
    meet_block,
    project_block,
)


class GenerationError(RuntimeError):
    pass


_MAX_ATTEMPTS = 64
_STEP_TRIES = 30


# ---------------------------------------------------------------------------
# generic random subspaces


def random_subspace(ambient_dim: int, dim: int, rng: random.Random) -> Subspace:
    """A uniformly scruffy random subspace with exactly the requested dimension."""
    if not 0 <= dim <= ambient_dim:
        raise ValueError("dimension out of range")
    for _ in range(200):
        rows = [
            [Fraction(rng.randint(-4, 4)) for _ in range(ambient_dim)]
            for _ in range(dim)
        ]
        candidate = Subspace.from_spanning(ambient_dim, rows)
        if candidate.dim == dim:
            return candidate
    raise GenerationError(f"could not hit a rank-{dim} subspace of Q^{ambient_dim}")


def random_nonfixed_subspace(
    split: TorusSplit, dim: int, rng: random.Random
) -> Subspace:
    for _ in range(200):
        v = random_subspace(split.ambient_dim, dim, rng)
        if not is_fixed(split, v):
            return v
    raise GenerationError("could not find a nonfixed subspace; blocks too small?")


def _vectors_inside(space: Subspace, count: int, rng: random.Random) -> list[tuple[Fraction, ...]]:
    rows = space.basis_rows()
    out = []
    for _ in range(count):
        vec = [Fraction(0)] * space.ambient_dim
        for row in rows:
            c = Fraction(rng.randint(-3, 3))
            if c != 0:
                vec = [a + c * b for a, b in zip(vec, row)]
        out.append(tuple(vec))
    return out


def _complement_vectors(
    whole: Subspace, part: Subspace, count: int, rng: random.Random
) -> list[tuple[Fraction, ...]] | None:
    """Vectors of ``whole`` extending ``part`` by exactly ``count`` dimensions."""
    if part.dim + count > whole.dim:
        return None
    for _ in range(_STEP_TRIES):
        vectors = _vectors_inside(whole, count, rng)
        extended = part + Subspace.from_spanning(whole.ambient_dim, vectors)
        if extended.dim == part.dim + count:
            return vectors
    return None


# ---------------------------------------------------------------------------
# linked orbit pairs (for the orbit-intersection dichotomy)


def _graph_partner(
    split: TorusSplit,
    over_first: Subspace,
    fixed_second: Subspace,
    rng: random.Random,
) -> Subspace | None:
    """{graph over a first-block subspace} + {an embedded second-block one}.

    The result projects onto exactly ``over_first`` in the first block and
    meets the second block in exactly ``fixed_second``; retried until it is
    nonfixed (some graph image escapes the fixed part).
    """
    if over_first.dim == 0:
        return None
    base_rows = [
        tuple(embedded)
        for embedded in embed_block(split, over_first, 1).basis_rows()
    ]
    second_coords = list(split.block_coords(2))
    for _ in range(_STEP_TRIES):
        rows = []
        for row in base_rows:
            vec = list(row)
            for c in second_coords:
                vec[c] += Fraction(rng.randint(-3, 3))
            rows.append(vec)
        rows.extend(embed_block(split, fixed_second, 2).basis_rows())
        candidate = Subspace.from_spanning(split.ambient_dim, rows)
        if candidate.dim != over_first.dim + fixed_second.dim:
            continue
        if not is_fixed(split, candidate):
            return candidate
    return None


def random_linked_pair(
    split: TorusSplit,
    dim: int,
    rng: random.Random,
    meeting: bool,
    mirrored: bool = False,
) -> tuple[Subspace, Subspace]:
    """A pair of nonfixed subspaces linked block-to-block.

    The pair always satisfies the hypothesis of the orbit-closure dichotomy:
    the second subspace's first-block projection equals the first one's
    first-block part (or the mirrored version). With ``meeting`` the shared
    boundary limit lies on both closures; otherwise the remaining block is
    perturbed so the closures are disjoint.
    """
    for _ in range(400):
        v = random_nonfixed_subspace(split, dim, rng)
        profile = block_profile(split, v)
        if not mirrored:
            over = profile.inside_first
            fixed_part = profile.onto_second
            free_room = split.dim2 - fixed_part.dim
            block_dim, block = split.dim2, 2
        else:
            over = profile.inside_second
            fixed_part = profile.onto_first
            free_room = split.dim1 - fixed_part.dim
            block_dim, block = split.dim1, 1
        if over.dim == 0 or free_room == 0:
            continue
        if not meeting:
            replacement = random_subspace(block_dim, fixed_part.dim, rng)
            if replacement == fixed_part or block_dim - replacement.dim == 0:
                continue
            fixed_part = replacement
        if not mirrored:
            partner = _graph_partner(split, over, fixed_part, rng)
        else:
            partner = _graph_partner(
                _swap(split), over, fixed_part, rng
            )
            partner = _unswap(split, partner) if partner is not None else None
        if partner is None:
            continue
        return v, partner
    raise GenerationError("could not build a linked orbit pair for these block sizes")


def _swap(split: TorusSplit) -> TorusSplit:
    return TorusSplit(split.dim2, split.dim1)


def _unswap(split: TorusSplit, v: Subspace | None) -> Subspace | None:
    """Move a subspace built in swapped block order back to the original order."""
    if v is None:
        return None
    rows = [row[split.dim2 :] + row[: split.dim2] for row in v.basis_rows()]
    return Subspace.from_spanning(split.ambient_dim, rows)


# ---------------------------------------------------------------------------
# exact series generation


def _caps_ok(ladder: DeltaSet, r: int, k: int, a: int, m: int) -> bool:
    """Flag-dimension caps at one ladder position.

    ``a`` is the first-block image dimension entering position k; choosing
    mobile dimension m there leaves kernels q = a - m (first block) and
    p = r + 1 - a (second block), all of which must fit inside the flags of
    the section space at that index.
    """
    i = ladder.indices[k]
    d = ladder.d
    q = a - m
    p = r + 1 - a
    if q < 0 or p < 0:
        return False
    if i.denominator == 1:
        level = int(i)
        return (
            a <= d + 1 - level
            and q <= d - level
            and p <= level
            and p + m <= level + 1
        )
    ceil_i = -(-i.numerator // i.denominator)
    floor_i = i.numerator // i.denominator
    return a <= d + 1 - ceil_i and p <= floor_i + 1 and p + m <= floor_i + 1


def exact_minimal_profiles(
    d: int, r: int, delta: Sequence[int], cap: int = 512
) -> list[tuple[int, ...]]:
    """All feasible exact minimal mobile-dimension profiles, up to ``cap``.

    A profile assigns each ladder index a nonnegative mobile dimension,
    positive at non-integer indices, summing to r + 1 and respecting the
    flag caps of the section-space model. Empty means no exact minimal
    series of these parameters exists in the model.
    """
    ladder = build_delta(d, delta)
    n = len(ladder)
    future_min = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        future_min[k] = future_min[k + 1] + (1 if ladder.indices[k].denominator != 1 else 0)
    out: list[tuple[int, ...]] = []

    def walk(k: int, a: int, acc: list[int]) -> None:
        if len(out) >= cap:
            return
        if k == n:
            if a == 0:
                out.append(tuple(acc))
            return
        low = 1 if ladder.indices[k].denominator != 1 else 0
        high = a - future_min[k + 1]
        for m in range(low, high + 1):
            if not _caps_ok(ladder, r, k, a, m):
                continue
            acc.append(m)
            walk(k + 1, a - m, acc)
            acc.pop()

    walk(0, r + 1, [])
    return out


def minimal_series_exists(d: int, r: int, delta: Sequence[int]) -> bool:
    """Whether any exact minimal series of these parameters exists."""
    if not 0 <= r <= d:
        return False
    return bool(exact_minimal_profiles(d, r, delta, cap=1))


def _kernel_room(model: CurveModel, i: Fraction) -> Subspace:
    """First-block vectors allowed inside the kernel at index i (ambient).

    At an integer index the node condition forces the coefficient at the node
    power to vanish on first-block-only vectors, so the room is one flag step
    deeper than at the neighbouring non-integer indices.
    """
    if i.denominator == 1:
        level = int(i) + 1
    else:
        level = -(-i.numerator // i.denominator)
    rows = []
    for power in range(level, model.d + 1):
        vec = [Fraction(0)] * model.ambient_dim
        vec[model.t_coord(power)] = Fraction(1)
        rows.append(vec)
    return Subspace.from_spanning(model.ambient_dim, rows)


def _kernel_flag(
    model: CurveModel,
    ladder: DeltaSet,
    r: int,
    mobile: Sequence[int],
    rng: random.Random,
) -> list[Subspace] | None:
    """Nested first-block kernels along the ladder, built top-down.

    The kernel at each position contains the kernel at the next one and must
    fit in a flag space that shrinks along the ladder, so the whole chain is
    constructed backwards; the profile caps make every extension fit. When
    the following step is an integer one that needs every second-block
    direction including the node one, the kernel is made to reach the node
    coefficient so a mover can carry it.
    """
    q_dims = []
    a = r + 1
    for m in mobile:
        q_dims.append(a - m)
        a -= m
    flags: list[Subspace | None] = [None] * len(ladder)
    current = Subspace.zero(model.ambient_dim)
    for pos in range(len(ladder) - 1, -1, -1):
        room = _kernel_room(model, ladder.indices[pos])
        need = q_dims[pos] - current.dim
        must_hit = None
        if pos + 1 < len(ladder):
            nxt = ladder.indices[pos + 1]
            if nxt.denominator == 1:
                p_next = r + 1 - q_dims[pos]
                if mobile[pos + 1] == int(nxt) + 1 - p_next:
                    must_hit = model.t_coord(int(nxt))
        if need < 0 or q_dims[pos] > room.dim:
            return None
        done = False
        for _ in range(_STEP_TRIES):
            extension = _complement_vectors(room, current, need, rng)
            if extension is None:
                return None
            candidate = current + Subspace.from_spanning(model.ambient_dim, extension)
            if must_hit is not None and all(
                row[must_hit] == 0 for row in candidate.basis_rows()
            ):
                continue
            current = candidate
            done = True
            break
        if not done:
            return None
        flags[pos] = current
    return flags  # type: ignore[return-value]


def _first_space(
    model: CurveModel, kernel: Subspace, mobile0: int, rng: random.Random
) -> Subspace | None:
    rows = list(kernel.basis_rows())
    if mobile0:
        # The only second-block direction at index 0 is the top s power, and
        # the node condition pins the constant t coefficient to match it.
        vec = [Fraction(0)] * model.ambient_dim
        vec[model.t_coord(0)] = Fraction(1)
        vec[model.s_coord(model.d)] = Fraction(1)
        for j in range(1, model.d + 1):
            vec[model.t_coord(j)] += Fraction(rng.randint(-3, 3))
        rows.append(tuple(vec))
    space = Subspace.from_spanning(model.ambient_dim, rows)
    if space.dim != kernel.dim + mobile0:
        return None
    return space


def _next_space(
    model: CurveModel,
    j: Fraction,
    mobile: int,
    kernel: Subspace,
    prev: Subspace,
    rng: random.Random,
) -> Subspace | None:
    split = model.split
    integer = j.denominator == 1
    incoming = zero_coordinate_section(prev, list(split.block_coords(2)))
    carried = embed_block(split, project_block(split, prev, 2), 2)
    if not incoming.contains(kernel):
        return None

    if integer:
        free_coords = [model.s_coord(p) for p in range(model.d - int(j) + 1, model.d + 1)]
    else:
        floor_j = j.numerator // j.denominator
        free_coords = [model.s_coord(p) for p in range(model.d - floor_j, model.d + 1)]

    for _ in range(_STEP_TRIES):
        movers = _complement_vectors(incoming, kernel, mobile, rng)
        if movers is None:
            return None
        rows = list(kernel.basis_rows()) + list(carried.basis_rows())
        for w in movers:
            vec = list(w)
            if integer:
                # Node condition: the image's bottom s coefficient matches the
                # mover's t coefficient at the node power.
                vec[model.s_coord(model.d - int(j))] = vec[model.t_coord(int(j))]
            for c in free_coords:
                vec[c] += Fraction(rng.randint(-3, 3))
            rows.append(tuple(vec))
        space = Subspace.from_spanning(model.ambient_dim, rows)
        if space.dim != kernel.dim + mobile + carried.dim:
            continue
        if meet_block(split, space, 1).dim != kernel.dim:
            continue
        if meet_block(split, space, 2).dim != carried.dim:
            continue
        if not section_space(model, j).subspace.contains(space):
            continue
        return space
    return None


def random_exact_lls(d: int, r: int, delta: Sequence[int], seed: int) -> LimitLinearSeries:
    """A seeded random exact minimal series of degree d and rank r.

    Requires 0 <= r <= d; the ladder must not have more non-integer indices
    than the mobile budget r + 1 allows, or no exact minimal series exists
    and the generator reports that.
    """
    if not 0 <= r <= d:
        raise ValueError(f"rank must satisfy 0 <= r <= d, got r={r}, d={d}")
    ladder = build_delta(d, delta)
    model = CurveModel(d)
    profiles = exact_minimal_profiles(d, r, delta)
    if not profiles:
        raise GenerationError(
            f"no exact minimal series of degree {d}, rank {r} exists on the"
            f" ladder of delta={tuple(delta)}: every mobile-dimension profile"
            " violates the section-space flag caps"
        )
    last_profile: tuple[int, ...] | None = None
    for attempt in range(_MAX_ATTEMPTS):
        # one 64-bit stream per stage and per ladder index, all split from the
        # seed, so any failure replays exactly
        root = random.Random((int(seed) * 0x9E3779B1 + attempt) & (2**64 - 1))
        profile = root.choice(profiles)
        last_profile = profile
        flag_rng = random.Random(root.getrandbits(64))
        step_rngs = [random.Random(root.getrandbits(64)) for _ in range(len(ladder))]
        flags = _kernel_flag(model, ladder, r, profile, flag_rng)
        if flags is None:
            continue
        spaces = []
        first = _first_space(model, flags[0], profile[0], step_rngs[0])
        if first is None:
            continue
        spaces.append(first)
        failed = False
        for pos in range(1, len(ladder)):
            nxt = _next_space(
                model, ladder.indices[pos], profile[pos], flags[pos], spaces[-1],
                step_rngs[pos],
            )
            if nxt is None:
                failed = True
                break
            spaces.append(nxt)
        if failed:
            continue
        g = LimitLinearSeries(model, r, ladder, tuple(spaces))
        data = numerical_data(g)
        if (
            check_exact(g).passed
            and data.is_minimal()
            and data.mobile == tuple(profile)
            and not membership_failures(g)
        ):
            return g
    raise GenerationError(
        f"retry budget exhausted for d={d}, r={r}, delta={tuple(delta)};"
        f" last profile tried: {last_profile}"
    )


# ---------------------------------------------------------------------------
# padding and corruption


def pad_with_trivial_slots(
    g: LimitLinearSeries, new_delta: Sequence[int], seed: int
) -> LimitLinearSeries:
    """Exact but non-minimal enlargement of an exact series.

    New non-integer slots are filled with the outgoing orbit limit of their
    left neighbour, a split space carrying no mobile dimension; the original
    slots embed order-preservingly at seeded random positions of each gap.
    Exactness is preserved, and minimal reduction undoes the padding.
    """
    new_steps = tuple(int(s) for s in new_delta)
    if len(new_steps) != g.model.d:
        raise ValueError("padding must keep the degree")
    if any(n < o for n, o in zip(new_steps, g.delta.steps)):
        raise ValueError("padding cannot remove subdivision steps")
    if not check_exact(g).passed:
        raise ValueError("only exact series can be padded while staying exact")
    rng = random.Random(seed)
    ladder = build_delta(g.model.d, new_steps)
    split = g.model.split

    placements: dict[int, set[int]] = {}
    for gap in range(1, g.model.d + 1):
        old_count = g.delta.steps[gap - 1] - 1
        new_count = new_steps[gap - 1] - 1
        placements[gap] = set(sorted(rng.sample(range(new_count), old_count)))

    old_nonintegers = {
        gap: [i for i in g.delta.indices if gap - 1 < i < gap]
        for gap in range(1, g.model.d + 1)
    }
    cursor = {gap: 0 for gap in placements}
    slot_in_gap = {gap: 0 for gap in placements}

    spaces: list[Subspace] = []
    for i in ladder.indices:
        if i.denominator == 1:
            spaces.append(g.space_at(i))
            continue
        gap = (i.numerator // i.denominator) + 1
        slot = slot_in_gap[gap]
        slot_in_gap[gap] += 1
        if slot in placements[gap]:
            original = old_nonintegers[gap][cursor[gap]]
            cursor[gap] += 1
            spaces.append(g.space_at(original))
        else:
            spaces.append(limit(split, spaces[-1], Direction.INFINITY))
    return LimitLinearSeries(g.model, g.rank, ladder, tuple(spaces))


def corrupt_exactness(g: LimitLinearSeries, seed: int) -> LimitLinearSeries:
    """A compatible but non-exact neighbour of an exact series.

    Tries, in seeded random order: collapsing a moving non-integer slot to
    its outgoing limit; replacing the first space by first-block directions
    only; replacing the last space by second-block directions only. Raises
    when the series admits none of these (e.g. rank equal to degree, where
    every slot is the full section space).
    """
    if not check_exact(g).passed:
        raise ValueError("corruption starts from an exact series")
    rng = random.Random(seed)
    model = g.model
    split = model.split
    data = numerical_data(g)

    candidates: list[tuple[str, Fraction]] = []
    for i, m in zip(g.delta.indices, data.mobile):
        if i.denominator != 1 and m > 0:
            candidates.append(("collapse", i))
    if len(g.delta) > 1:
        first = g.delta.indices[0]
        p0, q0, m0 = data.at(first)
        if m0 > 0 and q0 + m0 <= model.d:
            candidates.append(("first-block-only", first))
        last = g.delta.indices[-1]
        pd, qd, md = data.at(last)
        if md > 0 and pd + md <= model.d:
            candidates.append(("second-block-only", last))
    rng.shuffle(candidates)

    for strategy, i in candidates:
        spaces = list(g.spaces)
        pos = g.delta.position(i)
        if strategy == "collapse":
            spaces[pos] = limit(split, g.space_at(i), Direction.INFINITY)
        elif strategy == "first-block-only":
            inside = embed_block(split, meet_block(split, g.space_at(i), 1), 1)
            room = zero_coordinate_section(
                section_space(model, i).subspace, list(split.block_coords(2))
            )
            extra = _complement_vectors(room, inside, g.rank + 1 - inside.dim, rng)
            if extra is None:
                continue
            spaces[pos] = inside + Subspace.from_spanning(model.ambient_dim, extra)
        else:
            inside = embed_block(split, meet_block(split, g.space_at(i), 2), 2)
            room = zero_coordinate_section(
                section_space(model, i).subspace, list(split.block_coords(1))
            )
            extra = _complement_vectors(room, inside, g.rank + 1 - inside.dim, rng)
            if extra is None:
                continue
            spaces[pos] = inside + Subspace.from_spanning(model.ambient_dim, extra)
        candidate = LimitLinearSeries(model, g.rank, g.delta, tuple(spaces))
        if (
            check_compatible(candidate).passed
            and not check_exact(candidate).passed
            and not membership_failures(candidate)
        ):
            return candidate
    raise GenerationError(
        "series admits no compatible non-exact corruption"
        " (every slot may be forced, e.g. when rank equals degree)"
    )
