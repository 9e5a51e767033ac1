"""Max/min recursions that track degree increments, with branch bookkeeping.

Y_m = max[Y_{m-p-q}, -k Y_{m-q}, -k Y_{m-p}] and Z_m is the same with
min.  Branches are numbered 1, 2, 3 in that order and the set of
branches attaining the extremum is kept with each value.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class TropicalState:
    value: int
    argset: frozenset

    def __post_init__(self):
        if not self.argset:
            raise ValueError("argset must be nonempty")

    def render(self):
        """Subscript notation such as ``0_{1,2}``."""
        return f"{self.value}_{{{','.join(str(i) for i in sorted(self.argset))}}}"

    def __str__(self):
        return self.render()


@dataclass
class TropicalRun:
    kind: str
    s: int
    window: list
    states: list = field(default_factory=list)
    period: int = 0
    period_start: int = 0

    def values(self):
        return [st.value for st in self.states]

    def rendered(self):
        return [st.render() for st in self.states]


def _step(window, p, q, k, pick):
    n = p + q
    branches = (window[-n], -k * window[-q], -k * window[-p])
    best = pick(branches)
    return TropicalState(best, frozenset(i + 1 for i, v in enumerate(branches) if v == best))


def _window(p, q, s):
    n = p + q
    if not -n <= s <= -1:
        raise ValueError(f"s must lie in [{-n}, -1]")
    return [1 if j == s else 0 for j in range(-n, 0)]


def _floyd(window, p, q, k, pick):
    """Return (mu, lam): first window index in the cycle and cycle length.

    Window number j is the window ending at index j - 1, so window 0 is
    the initial data.
    """
    def f(w):
        return w[1:] + (_step(w, p, q, k, pick).value,)

    x0 = tuple(window)
    tort, hare = f(x0), f(f(x0))
    while tort != hare:
        tort, hare = f(tort), f(f(hare))
    mu, tort = 0, x0
    while tort != hare:
        tort, hare = f(tort), f(hare)
        mu += 1
    lam, hare = 1, f(tort)
    while tort != hare:
        hare = f(hare)
        lam += 1
    return mu, lam


def _run(kind, spec, s, m_max, pick):
    p, q, k = spec.p, spec.q, spec.k
    window = _window(p, q, s)
    run = TropicalRun(kind, s, list(window))
    w = list(window)
    for _m in range(m_max + 1):
        st = _step(w, p, q, k, pick)
        run.states.append(st)
        w = w[1:] + [st.value]
    mu, lam = _floyd(window, p, q, k, pick)
    run.period = lam
    # the state at index m is a function of window number m
    run.period_start = mu
    return run


def tropical_Y(spec, s, m_max):
    """Y^{(s)}_m for 0 <= m <= m_max with argmax sets and eventual period."""
    return _run("Y", spec, s, m_max, max)


def tropical_Z(spec, s, m_max):
    """Z^{(s)}_m for 0 <= m <= m_max with argmin sets and eventual period."""
    return _run("Z", spec, s, m_max, min)


def tropical_table(spec, m_max):
    """All Y and Z runs for s in [-p-q, -1]."""
    n = spec.p + spec.q
    return {
        "Y": {s: tropical_Y(spec, s, m_max) for s in range(-n, 0)},
        "Z": {s: tropical_Z(spec, s, m_max) for s in range(-n, 0)},
    }
