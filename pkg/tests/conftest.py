import itertools

import pytest

# (criterion, passed, detail) lines reported at the end of the run
ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def report():
    def _report(name, ok, detail=""):
        ACCEPTANCE_LINES.append((name, bool(ok), detail))
        return ok

    return _report


def words_over(alphabet, n):
    return itertools.product(alphabet, repeat=n)


def brute_split(w, s):
    """Try every rotation and every choice of s - 1 cut points."""
    n = len(w)
    for r in range(n):
        x = w[r:] + w[:r]
        for cuts in itertools.combinations(range(1, n), s - 1):
            bounds = (0, *cuts, n)
            heights = {sum(x[bounds[i]:bounds[i + 1]]) for i in range(s)}
            if len(heights) == 1:
                return True
    return False


def brute_is_rop(w):
    return len(w) > 0 and sum(w) % 2 == 0 and not brute_split(w, 2)


def brute_lyndon(w):
    return len(w) > 0 and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def brute_classes(alphabet, n, keep):
    """Least rotations of every word of length n satisfying ``keep``."""
    reps = set()
    for w in words_over(alphabet, n):
        if keep(w):
            reps.add(min(w[i:] + w[:i] for i in range(n)))
    return sorted(reps)


def brute_pairings(w, d):
    """All partitions of the 3-positions into pairs {j, j+d mod n}."""
    n = len(w)
    threes = [i for i, a in enumerate(w) if a == 3]

    def go(left):
        if not left:
            yield []
            return
        j = left[0]
        for k in ((j + d) % n, (j - d) % n):
            if k != j and k in left:
                rest = [i for i in left if i not in (j, k)]
                for tail in go(rest):
                    yield [frozenset((j, k))] + tail

    return {frozenset(p) for p in go(threes)}
