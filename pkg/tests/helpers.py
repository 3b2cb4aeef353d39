from fractions import Fraction as F

from divgames import DiversityGame, coalition

# example3 agent ids: reds r1..r7 are 0..6, blues b1, b2 are 7, 8
AGENT = {**{f"r{k}": k - 1 for k in range(1, 8)}, "b1": 7, "b2": 8}


def ids(*names):
    return [AGENT[x] for x in names]


def coal(*names):
    return coalition(ids(*names))


def red_alone_blue_mixed():
    """One red who wants to be alone, one blue who wants company."""
    return DiversityGame(1, 1, ((F(1), F(1, 2), F(0)), (F(1, 2), F(0), F(1))))
