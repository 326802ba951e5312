from pathlib import Path

import pytest

from couplaw import build_graphs, scan_tree

FIXTURES = Path(__file__).parent / "fixtures"

SHORT = {
    "C": "com.example.draw.Canvas",
    "Ci": "com.example.draw.Circle",
    "D": "com.example.draw.Drawable",
    "L": "com.example.draw.Label",
    "Sc": "com.example.draw.Scene",
    "Sh": "com.example.draw.Shape",
    "Sp": "com.example.draw.Sprite",
    "Sq": "com.example.draw.Square",
    "P": "com.example.geom.Point",
    "V": "com.example.geom.Vector",
}


def edges(*pairs):
    """Expand short-name pairs like 'Ci->P' into qualified edge sets."""
    out = set()
    for pair in pairs:
        src, dst = pair.split("->")
        out.add((SHORT[src], SHORT[dst]))
    return frozenset(out)


@pytest.fixture(scope="session")
def corpus10():
    return scan_tree(FIXTURES / "corpus10")


@pytest.fixture(scope="session")
def graphs10(corpus10):
    return build_graphs(corpus10)
