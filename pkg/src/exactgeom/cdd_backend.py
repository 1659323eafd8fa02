"""
Thin exact-arithmetic wrapper around pycddlib.

All matrices are built in fraction mode. Row conventions follow cdd:
  H-rep row [b, a_1..a_D]  means  b + <a, x> >= 0  (= 0 for rows in lin_set)
  V-rep row [t, x_1..x_D]  is a point when t = 1, a ray when t = 0,
                           and a line when the row is in lin_set.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import cdd

from src.exceptions import GeometryException

logger = logging.getLogger(__name__)

Row = Tuple[Fraction, ...]


@dataclass(frozen=True)
class HRep:
    """Inequalities b + <a,x> >= 0 and equations b + <a,x> = 0"""

    inequalities: Tuple[Row, ...]
    equations: Tuple[Row, ...]


@dataclass(frozen=True)
class VRep:
    """Points, rays and lines (each row without the leading cdd type flag)"""

    points: Tuple[Row, ...]
    rays: Tuple[Row, ...]
    lines: Tuple[Row, ...]


def _as_row(values: Sequence) -> Row:
    return tuple(Fraction(v) for v in values)


def _matrix(
    rows: Sequence[Sequence],
    rep_type: "cdd.RepType",
    linear_rows: Sequence[Sequence] = (),
) -> "cdd.Matrix":
    if rows:
        mat = cdd.Matrix([list(r) for r in rows], linear=False, number_type="fraction")
        if linear_rows:
            mat.extend([list(r) for r in linear_rows], linear=True)
    else:
        mat = cdd.Matrix(
            [list(r) for r in linear_rows], linear=True, number_type="fraction"
        )
    mat.rep_type = rep_type
    return mat


def _split_h(mat: "cdd.Matrix") -> HRep:
    lin = mat.lin_set
    ineqs: List[Row] = []
    eqs: List[Row] = []
    for i in range(mat.row_size):
        row = _as_row(mat[i])
        (eqs if i in lin else ineqs).append(row)
    return HRep(tuple(ineqs), tuple(eqs))


def _split_v(mat: "cdd.Matrix") -> VRep:
    lin = mat.lin_set
    points: List[Row] = []
    rays: List[Row] = []
    lines: List[Row] = []
    for i in range(mat.row_size):
        row = _as_row(mat[i])
        if i in lin:
            lines.append(row[1:])
        elif row[0] == 0:
            rays.append(row[1:])
        else:
            points.append(tuple(x / row[0] for x in row[1:]))
    return VRep(tuple(points), tuple(rays), tuple(lines))


def v_to_h(
    points: Sequence[Sequence], rays: Sequence[Sequence] = (), lines: Sequence[Sequence] = ()
) -> HRep:
    """Irredundant H-representation of conv(points) + cone(rays) + span(lines)"""
    rows = [[1, *p] for p in points] + [[0, *r] for r in rays]
    if not rows:
        raise GeometryException("V-representation needs at least one point or ray")
    mat = _matrix(rows, cdd.RepType.GENERATOR, [[0, *l] for l in lines])
    h = cdd.Polyhedron(mat).get_inequalities()
    h.canonicalize()
    return _split_h(h)


def h_to_v(inequalities: Sequence[Sequence], equations: Sequence[Sequence] = ()) -> VRep:
    """Minimal V-representation of an H-described polyhedron"""
    if not inequalities and not equations:
        raise GeometryException("H-representation needs at least one row")
    mat = _matrix(inequalities, cdd.RepType.INEQUALITY, equations)
    v = cdd.Polyhedron(mat).get_generators()
    v.canonicalize()
    return _split_v(v)


def reduce_v(points: Sequence[Sequence]) -> Tuple[Row, ...]:
    """Drop points that are not vertices of their convex hull"""
    mat = _matrix([[1, *p] for p in points], cdd.RepType.GENERATOR)
    mat.canonicalize()
    return _split_v(mat).points


def reduce_h(inequalities: Sequence[Sequence]) -> HRep:
    """Remove redundant inequalities and expose implicit equations"""
    mat = _matrix(inequalities, cdd.RepType.INEQUALITY)
    mat.canonicalize()
    return _split_h(mat)


def lp_maximize(
    inequalities: Sequence[Sequence], objective: Sequence
) -> Tuple[Optional[Fraction], Optional[Row]]:
    """
    Maximize <objective, (1, x)> subject to b + <a,x> >= 0.

    Returns (optimum, primal solution) or (None, None) when the LP is not
    solved to optimality (infeasible or unbounded).
    """
    mat = _matrix(inequalities, cdd.RepType.INEQUALITY)
    mat.obj_type = cdd.LPObjType.MAX
    mat.obj_func = tuple(objective)
    lp = cdd.LinProg(mat)
    lp.solve()
    if lp.status != cdd.LPStatusType.OPTIMAL:
        logger.debug(
            f"LP not optimal: {lp.status}",
            extra={"operation": "lp_maximize", "rows": len(inequalities)},
        )
        return None, None
    return Fraction(lp.obj_value), _as_row(lp.primal_solution)
