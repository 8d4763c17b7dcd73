"""Simple (voting) games: coalitions, desirability, power indices and rankings."""

from .core import (Coalition, EnumerationCapError, GameError, SetFamily, SimpleGame,
                   WeightedGame, dual, game_from_weighted, is_winning, min_sets,
                   minimal_blocking)
from .desirability import (DesirabilityMatrix, PairRelation, classify_pair,
                           desirability_matrix, is_total, weakly_desirable)
from .rankings import (Order, Ranking, ThetaVector, criticality_ranking, dpi, lex_compare,
                       lpgr, pgi, ranking_from_scores, theta, theta_star)

__all__ = [
    "Coalition", "EnumerationCapError", "GameError", "SetFamily", "SimpleGame", "WeightedGame",
    "dual", "game_from_weighted", "is_winning", "min_sets", "minimal_blocking",
    "DesirabilityMatrix", "PairRelation", "classify_pair", "desirability_matrix", "is_total",
    "weakly_desirable", "Order", "Ranking", "ThetaVector", "criticality_ranking", "dpi",
    "lex_compare", "lpgr", "pgi", "ranking_from_scores", "theta", "theta_star",
]
