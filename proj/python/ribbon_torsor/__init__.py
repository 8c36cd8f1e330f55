"""Divisors, spanning trees and torsors on ribbon graphs."""

from ._core import (
    DegreeMismatch,
    HasBridge,
    NotBreakDivisor,
    NotPlanar,
    NotSimple,
    ParseError,
    RibbonError,
    RibbonGraph,
    ValidationError,
    act_bernardi,
    act_rotor,
    alpha_left,
    alpha_right,
    are_equivalent,
    beta,
    break_divisors,
    check_square,
    compare_torsors,
    compare_vertices,
    complete_graph,
    default_corpus,
    dual,
    dual_class,
    laplacian_minor_determinant,
    picard_order,
    q_reduce,
    rotation_systems,
    rotor_move,
    search,
    spanning_trees,
    suite,
    theta_graph,
    tour,
    triangle_graph,
)

__all__ = [name for name in dir() if not name.startswith("_")]
