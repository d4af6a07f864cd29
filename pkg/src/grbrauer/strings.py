"""Strings and bands of monomial string algebras.

Words are written right to left like paths: in ``Word.letters`` the last
letter is applied first.  Letters are ordered by ``(arrow id, inverse)`` with
direct letters first; canonical forms are minimal under that order.

The enumerators work on an integer encoding (letter ``2*a + inverse`` for the
``a``-th arrow in sorted order, so integer order is letter order) and keep
words in application order while extending them.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

DEFAULT_BUDGET = 10_000_000


class UnknownArrow(KeyError):
    pass


class NotABand(ValueError):
    pass


class SubwordForbidden(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class Letter(NamedTuple):
    arrow: str
    inverse: bool = False

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    def __str__(self) -> str:
        return self.arrow + ("^-1" if self.inverse else "")


@dataclass(frozen=True)
class Word:
    letters: tuple[Letter, ...]
    base: str | None = None  # basepoint of a trivial word

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "Word":
        return Word(tuple(c.inv() for c in reversed(self.letters)), self.base)

    def rotate(self, k: int) -> "Word":
        k %= max(len(self.letters), 1)
        return Word(self.letters[k:] + self.letters[:k], self.base)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        return Word(self.letters * k)

    def is_directed(self) -> bool:
        return bool(self.letters) and not any(c.inverse for c in self.letters)

    def is_inverse(self) -> bool:
        return bool(self.letters) and all(c.inverse for c in self.letters)

    def key(self):
        return self.letters

    def __str__(self) -> str:
        if not self.letters:
            return f"1_{self.base}"
        return " ".join(map(str, self.letters))


_TOKEN = re.compile(r"([^\s^]+)(\^-1)?")


def parse_word(text: str | Sequence, base: str | None = None) -> Word:
    """Parse ``"b2 b1 b0 a0^-1"``-style text (or a sequence of tokens/Letters)."""
    if isinstance(text, Word):
        return text
    if isinstance(text, str):
        t = text.strip()
        if t.startswith("1_"):
            return Word((), t[2:])
        tokens = t.split()
    else:
        tokens = list(text)
    letters = []
    for tok in tokens:
        if isinstance(tok, Letter):
            letters.append(tok)
            continue
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise ValueError(f"bad letter {tok!r}")
        letters.append(Letter(m.group(1), m.group(2) is not None))
    return Word(tuple(letters), base)


def path_word(path: Sequence[str]) -> Word:
    """The directed word of a path given as written-order arrow ids."""
    return Word(tuple(Letter(a) for a in path))


@dataclass(frozen=True)
class Presentation:
    """A quiver with a set of forbidden paths (written order)."""

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (id, source, target)
    forbidden: tuple[tuple[str, ...], ...]
    name: str = ""

    def source(self, arrow: str) -> str:
        return _engine(self).arrow_src[arrow]

    def target(self, arrow: str) -> str:
        return _engine(self).arrow_tgt[arrow]


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(seq) * 2
    n = len(s)
    f = [-1] * n
    k = 0
    for j in range(1, n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % max(len(seq), 1)


def _min_rotation(seq: Sequence) -> tuple:
    k = least_rotation(seq)
    return tuple(seq[k:]) + tuple(seq[:k])


def is_primitive(seq: Sequence) -> bool:
    n = len(seq)
    for p in range(1, n // 2 + 1):
        if n % p == 0 and all(seq[i] == seq[i % p] for i in range(n)):
            return False
    return n > 0


class _Engine:
    """Integer-encoded view of a presentation used by every word routine."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        arrows = sorted(pres.arrows, key=lambda a: a[0])
        ids = [a[0] for a in arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids in presentation")
        self.arrow_ids = ids
        self.index = {a: i for i, a in enumerate(ids)}
        self.arrow_src = {a[0]: a[1] for a in arrows}
        self.arrow_tgt = {a[0]: a[2] for a in arrows}
        n = 2 * len(ids)
        self.src = [None] * n
        self.tgt = [None] * n
        for i, (_, s, t) in enumerate(arrows):
            self.src[2 * i], self.tgt[2 * i] = s, t
            self.src[2 * i + 1], self.tgt[2 * i + 1] = t, s
        self.out = {v: [] for v in pres.vertices}
        for x in range(n):
            self.out.setdefault(self.src[x], []).append(x)
        f_app = set()
        for p in pres.forbidden:
            try:
                f_app.add(tuple(self.index[a] for a in reversed(p)))
            except KeyError as exc:
                raise UnknownArrow(f"forbidden path uses unknown arrow {exc.args[0]}") from None
        self.f_app = f_app
        self.f_rev = {tuple(reversed(p)) for p in f_app}
        self.lengths = sorted({len(p) for p in f_app})
        self.max_forbidden = max(self.lengths, default=0)
        self.keep = max(self.max_forbidden - 1, 0)

    # letters <-> codes
    def encode(self, w: Word) -> list[int]:
        """Application-order codes of ``w``."""
        out = []
        for c in reversed(w.letters):
            try:
                out.append(2 * self.index[c.arrow] + int(c.inverse))
            except KeyError:
                raise UnknownArrow(c.arrow) from None
        return out

    def written(self, codes: Sequence[int]) -> tuple[int, ...]:
        return tuple(reversed(codes))

    def decode_written(self, written: Sequence[int]) -> Word:
        return Word(tuple(Letter(self.arrow_ids[x >> 1], bool(x & 1)) for x in written))

    # incremental validity
    def start(self, x: int):
        """Run state after the one-letter word ``x``, or None if ``x`` is forbidden."""
        run = (x >> 1,)
        if 1 in self.lengths and run in (self.f_rev if x & 1 else self.f_app):
            return None
        return run[len(run) - self.keep:] if self.keep else ()

    def step(self, last: int, run: tuple, x: int):
        """Run state after appending ``x`` to a word ending in ``last``; None if invalid."""
        if self.src[x] != self.tgt[last] or x == last ^ 1:
            return None
        a = x >> 1
        run = run + (a,) if (x & 1) == (last & 1) else (a,)
        table = self.f_rev if x & 1 else self.f_app
        n = len(run)
        for ln in self.lengths:
            if ln > n:
                break
            if run[n - ln:] in table:
                return None
        if not self.keep:
            return ()
        return run[n - self.keep:] if n > self.keep else run

    def check(self, codes: Sequence[int]):
        """Final (last letter, run) state if ``codes`` is a string, else None."""
        if not codes:
            return None
        run = self.start(codes[0])
        if run is None:
            return None
        last = codes[0]
        for x in codes[1:]:
            run = self.step(last, run, x)
            if run is None:
                return None
            last = x
        return last, run

    def is_string(self, codes: Sequence[int]) -> bool:
        return not codes or self.check(codes) is not None

    def power_bound(self, n: int) -> int:
        return math.ceil((self.max_forbidden + n) / n) + 1

    def cyclic_ok(self, codes: Sequence[int], state=None) -> bool:
        """Is every power of the closed word ``codes`` a string?"""
        if state is None:
            state = self.check(codes)
            if state is None:
                return False
        last, run = state
        for _ in range(self.power_bound(len(codes)) - 1):
            for x in codes:
                run = self.step(last, run, x)
                if run is None:
                    return False
                last = x
        return True

    def is_band(self, codes: Sequence[int]) -> bool:
        if not codes or self.src[codes[0]] != self.tgt[codes[-1]]:
            return False
        dirs = {x & 1 for x in codes}
        if len(dirs) != 2:
            return False
        return is_primitive(codes) and self.cyclic_ok(codes)

    def canonical_string(self, codes: Sequence[int]) -> tuple[int, ...]:
        return min(tuple(reversed(codes)), tuple(x ^ 1 for x in codes))

    def canonical_band(self, codes: Sequence[int]) -> tuple[int, ...]:
        return min(_min_rotation(tuple(reversed(codes))), _min_rotation(tuple(x ^ 1 for x in codes)))

    # enumeration
    def walk(self, max_len: int, visit, budget: int = DEFAULT_BUDGET, starts=None):
        """Depth-first over all nonempty strings of length <= max_len.

        ``visit(word, state)`` is called on every string (application order);
        ``starts`` optionally fixes the initial words.
        """
        steps = 0
        out = self.out
        step = self.step

        def rec(word, run):
            nonlocal steps
            visit(word, run)
            if len(word) >= max_len:
                return
            last = word[-1]
            for x in out.get(self.tgt[last], ()):
                steps += 1
                if steps > budget:
                    raise BudgetExceeded(f"enumeration exceeded {budget} extension steps")
                r = step(last, run, x)
                if r is not None:
                    word.append(x)
                    rec(word, r)
                    word.pop()

        if starts is None:
            starts = []
            for x in range(len(self.src)):
                r = self.start(x)
                if r is not None:
                    starts.append(([x], r))
        for word, run in starts:
            if len(word) <= max_len:
                rec(list(word), run)
        return steps


@lru_cache(maxsize=256)
def _engine(pres: Presentation) -> _Engine:
    return _Engine(pres)


def engine(pres: Presentation) -> _Engine:
    return _engine(pres)


# -- public operations --------------------------------------------------------


def word_source(pres: Presentation, w: Word) -> str:
    if not w.letters:
        return w.base
    eng = _engine(pres)
    return eng.src[eng.encode(w)[0]]


def word_target(pres: Presentation, w: Word) -> str:
    if not w.letters:
        return w.base
    eng = _engine(pres)
    return eng.tgt[eng.encode(w)[-1]]


def is_string(pres: Presentation, w: Word | str) -> bool:
    w = parse_word(w)
    eng = _engine(pres)
    return eng.is_string(eng.encode(w))


def is_band(pres: Presentation, w: Word | str) -> bool:
    w = parse_word(w)
    eng = _engine(pres)
    return eng.is_band(eng.encode(w))


def canonical_string(w: Word | str) -> Word:
    w = parse_word(w)
    if not w.letters:
        return w
    inv = w.inverse()
    return w if w.letters <= inv.letters else inv


def canonical_band(w: Word | str, pres: Presentation | None = None) -> Word:
    """Least word among all rotations of ``w`` and of its inverse."""
    w = parse_word(w)
    if pres is not None:
        if not is_band(pres, w):
            raise NotABand(str(w))
    elif not w.letters or not is_primitive(w.letters) or len({c.inverse for c in w.letters}) != 2:
        raise NotABand(str(w))
    a = _min_rotation(w.letters)
    b = _min_rotation(w.inverse().letters)
    return Word(min(a, b))


def enumerate_strings(pres: Presentation, max_len: int, budget: int = DEFAULT_BUDGET) -> set[Word]:
    eng = _engine(pres)
    found: set[tuple[int, ...]] = set()
    eng.walk(max_len, lambda word, run: found.add(eng.canonical_string(word)), budget)
    out = {Word((), v) for v in pres.vertices}
    out.update(eng.decode_written(c) for c in found)
    return out


def _band_codes(eng: _Engine, max_len: int, budget: int) -> set[tuple[int, ...]]:
    """Canonical codes of all bands of length <= max_len.

    Every band class has a rotation starting with its least letter, so the
    search from a start letter ``x`` only uses letters ``>= x``.
    """
    found: set[tuple[int, ...]] = set()
    src, tgt, out, step = eng.src, eng.tgt, eng.out, eng.step
    steps = 0

    def rec(word, run, x0, home):
        nonlocal steps
        last = word[-1]
        n = len(word)
        if n >= 2 and tgt[last] == home:
            first = word[0] & 1
            if any((y & 1) != first for y in word) and is_primitive(word) \
                    and eng.cyclic_ok(word, (last, run)):
                found.add(eng.canonical_band(word))
        if n >= max_len:
            return
        for x in out.get(tgt[last], ()):
            if x < x0:
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"enumeration exceeded {budget} extension steps")
            r = step(last, run, x)
            if r is not None:
                word.append(x)
                rec(word, r, x0, home)
                word.pop()

    for x in range(len(src)):
        r = eng.start(x)
        if r is not None:
            rec([x], r, x, src[x])
    return found


def enumerate_bands(pres: Presentation, max_len: int, budget: int = DEFAULT_BUDGET) -> set[Word]:
    eng = _engine(pres)
    return {eng.decode_written(c) for c in _band_codes(eng, max_len, budget)}


def band_census(pres: Presentation, max_len: int, budget: int = DEFAULT_BUDGET) -> int:
    return len(_band_codes(_engine(pres), max_len, budget))


def contains_subword(w: Word, sub: Word) -> bool:
    n, k = len(w.letters), len(sub.letters)
    return any(w.letters[i:i + k] == sub.letters for i in range(n - k + 1))


def strings_containing(pres: Presentation, sub: Word | Sequence[str], max_len: int,
                       budget: int = DEFAULT_BUDGET) -> int:
    """Number of string classes of length <= max_len containing ``sub`` or its inverse.

    ``sub`` is a path (written-order arrow ids) or a Word.  Strings are grown
    outwards from ``sub`` in both directions instead of filtering the full
    string set.
    """
    if not isinstance(sub, Word):
        sub = path_word(sub)
    eng = _engine(pres)
    core = eng.encode(sub)
    if not core or eng.check(core) is None:
        raise SubwordForbidden(str(sub))
    if len(core) > max_len:
        return 0
    found: set[tuple[int, ...]] = set()
    # grow on the left (later letters), then on the right (earlier letters)
    # by growing the inverse word on the left
    lefts: list[list[int]] = []
    state = eng.check(core)
    eng.walk(max_len, lambda word, run: lefts.append(list(word)), budget,
             starts=[(core, state[1])])
    for left in lefts:
        inv = [x ^ 1 for x in reversed(left)]
        st = eng.check(inv)
        eng.walk(max_len, lambda word, run: found.add(eng.canonical_string(word)), budget,
                 starts=[(inv, st[1])])
    return len(found)


@dataclass(frozen=True)
class FamilyRow:
    k: int
    word: Word
    is_band: bool


@dataclass(frozen=True)
class BandFamily:
    shape: str  # "overlap" (directed closed prefix + shared inverse letter) or "junction"
    b1: Word
    b2: Word
    rows: tuple[FamilyRow, ...]

    @property
    def verified(self) -> bool:
        return all(r.is_band for r in self.rows)


def _rotations(eng: _Engine, codes: Sequence[int]) -> list[tuple[int, ...]]:
    """All rotations of a closed word and of its inverse (application order)."""
    n = len(codes)
    inv = [x ^ 1 for x in reversed(codes)]
    seen, out = set(), []
    for base in (list(codes), inv):
        for k in range(n):
            r = tuple(base[k:] + base[:k])
            if r not in seen:
                seen.add(r)
                out.append(r)
    return out


def _overlap_shape(eng: _Engine, c1: Sequence[int], c2: Sequence[int]) -> bool:
    """Shared directed closed prefix, then the same inverse letter, source visited once."""
    src0 = eng.src[c1[0]]
    for l in range(1, min(len(c1), len(c2))):
        if c1[l - 1] != c2[l - 1] or c1[l - 1] & 1:
            return False
        if eng.tgt[c1[l - 1]] != src0:
            continue
        if c1[l] != c2[l] or not c1[l] & 1:
            continue
        if all(eng.src[x] != src0 for x in c1[l + 1:]) and all(eng.src[x] != src0 for x in c2[l + 1:]):
            return True
    return False


def band_power_family(pres: Presentation, b1: Word | str, b2: Word | str, k_max: int = 3) -> BandFamily:
    """Build and check the words ``b2^k b1`` for ``k = 1..k_max``.

    The rotations of ``b1`` and ``b2`` are chosen to share a directed closed
    prefix followed by a common inverse letter; failing that, any pair of
    rotations at a common vertex whose product ``b2 b1`` is already a band is
    used.  Raises ShapeMismatch when neither exists or the bands coincide.
    """
    b1, b2 = parse_word(b1), parse_word(b2)
    eng = _engine(pres)
    c1, c2 = eng.encode(b1), eng.encode(b2)
    for c, w in ((c1, b1), (c2, b2)):
        if not eng.is_band(c):
            raise ShapeMismatch(f"{w} is not a band")
    if eng.canonical_band(c1) == eng.canonical_band(c2):
        raise ShapeMismatch("the two bands are equivalent")
    rots1, rots2 = _rotations(eng, c1), _rotations(eng, c2)
    chosen = None
    for r1 in rots1:
        for r2 in rots2:
            if _overlap_shape(eng, r1, r2):
                chosen = ("overlap", r1, r2)
                break
        if chosen:
            break
    if chosen is None:
        for r1 in rots1:
            for r2 in rots2:
                if eng.src[r1[0]] == eng.src[r2[0]] and eng.is_band(list(r1) + list(r2)):
                    chosen = ("junction", r1, r2)
                    break
            if chosen:
                break
    if chosen is None:
        raise ShapeMismatch("no rotations of the two bands can be glued")
    shape, r1, r2 = chosen
    rows = []
    for k in range(1, k_max + 1):
        codes = list(r1) + list(r2) * k
        rows.append(FamilyRow(k, eng.decode_written(eng.written(codes)), eng.is_band(codes)))
    return BandFamily(shape, eng.decode_written(eng.written(r1)), eng.decode_written(eng.written(r2)), tuple(rows))


def is_simple_string(pres: Presentation, w: Word) -> bool:
    """All sources pairwise distinct and the target differs from each source."""
    if not w.letters:
        return False
    eng = _engine(pres)
    codes = eng.encode(w)
    srcs = [eng.src[x] for x in codes]
    return len(set(srcs)) == len(srcs) and eng.tgt[codes[-1]] not in srcs
