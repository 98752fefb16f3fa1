import random

import pytest

from jetmetric.presentation import parse_presentation

# one line per acceptance criterion, printed after the run (see
# pytest_terminal_summary below) so the checklist survives output capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance checklist")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def P():
    """Shorthand parser used all over the suite."""
    return parse_presentation


@pytest.fixture
def cusp():
    return parse_presentation("ring Q[x, y]\nlocal\nideal: y^2 - x^3")


@pytest.fixture
def plane():
    return parse_presentation("ring Q[x, y]\ngraded\nideal: ;")


@pytest.fixture
def quartic_cone():
    return parse_presentation("ring Q[x, y, z]\ngraded\nideal: x^4 + y^4 + z^4")


@pytest.fixture
def fat_point():
    return parse_presentation("ring Q[x, y]\ngraded\nideal: x^2, x*y, y^2")


# ---------------------------------------------------------------------------
# random presentation corpus, shared by property tests and the acceptance gate

_COEFFS = {"Q": ["1", "-1", "2", "-2", "3", "1/2"],
           "F_2": ["1"],
           "F_3": ["1", "2"]}


def _mono_str(exps, names):
    parts = []
    for e, v in zip(exps, names):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _random_mono(rng: random.Random, nvars: int, deg: int):
    exps = [0] * nvars
    for _ in range(deg):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_presentation_text(rng: random.Random, field: str, nvars: int,
                             mode: str, max_deg: int = 4) -> str:
    names = ["x", "y", "z"][:nvars]
    ngens = rng.randint(1, 3)
    gens = []
    for _ in range(ngens):
        if mode == "graded":
            deg = rng.randint(1, max_deg)
            degs = [deg] * rng.randint(1, 3)
        else:
            degs = [rng.randint(1, max_deg) for _ in range(rng.randint(1, 3))]
        terms = []
        for d in degs:
            mono = _random_mono(rng, nvars, d)
            coeff = rng.choice(_COEFFS[field])
            ms = _mono_str(mono, names)
            terms.append(ms if coeff == "1" else f"{coeff}*{ms}")
        expr = terms[0]
        for t in terms[1:]:
            expr += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        gens.append(expr)
    return (f"ring {field}[{', '.join(names)}]\n{mode}\n"
            f"ideal: {', '.join(gens)}")


def random_presentation(rng: random.Random, field: str, nvars: int, mode: str,
                        max_deg: int = 4):
    return parse_presentation(
        random_presentation_text(rng, field, nvars, mode, max_deg))
