"""
Published energy tables of the combined potential, for diff reports.

All three tables share a = 2, b = 50, mu = 1, V0 = 1, V1 = 0.01, V2 = 0.5
and use the (0,0), then l = 0..n-1 row layout with D = 3, 4, 5 columns.
Only table 1 follows from the closed form with its stated parameters;
tables 2 and 3 are kept for comparison output.
"""
from dataclasses import dataclass
from typing import Optional

from api.models import ApproximationParams, PotentialParams, ProblemSpec

DIMS = (3, 4, 5)

# (n, l): energies for D = 3, 4, 5
_TABLE_1 = {
    (0, 0): (-0.693561969, -1.483794256, -2.749854638),
    (1, 0): (-2.400662738, -3.520372978, -5.150960406),
    (2, 0): (-5.107768168, -6.565715334, -8.583619961),
    (2, 1): (-8.583619961, -11.07635272, -14.02084003),
    (3, 0): (-8.81487444, -10.61307885, -13.02521012),
    (3, 1): (-13.02521012, -15.92716134, -19.28351018),
    (3, 2): (-19.28351018, -23.08296764, -27.32202956),
    (4, 0): (-13.52198098, -15.66115049, -18.47027444),
    (4, 1): (-18.47027444, -21.78663214, -25.56228156),
    (4, 2): (-25.56228156, -29.78098662, -34.43704278),
    (4, 3): (-34.43704278, -39.52876901, -45.05614563),
    (5, 0): (-19.22908762, -21.7095332, -24.91696686),
    (5, 1): (-24.91696686, -28.65040322, -32.84945913),
    (5, 2): (-32.84945913, -37.4928681, -42.57256298),
    (5, 3): (-42.57256298, -48.08566295, -54.0315293),
    (5, 4): (-54.0315293, -60.41053758, -67.22351809),
}

_TABLE_2 = {
    (0, 0): (-113.1097402, -560.9727952, -1316.065556),
    (1, 0): (-201.8384501, -694.656059, -1491.095494),
    (2, 0): (-315.5719709, -856.6308917, -1697.976766),
    (2, 1): (-1697.976766, -2836.531982, -4271.56472),
    (3, 0): (-454.3074065, -1045.392669, -1934.208287),
    (3, 1): (-1934.208287, -3118.419739, -4597.997338),
    (3, 2): (-4597.997338, -6373.079767, -8443.782235),
    (4, 0): (-618.0437527, -1260.207686, -2198.334215),
    (4, 1): (-2198.334215, -3429.966834, -4955.615228),
    (4, 2): (-4955.615228, -6775.822056, -8890.971435),
    (4, 3): (-8890.971435, -11301.32424, -14007.05962),
    (5, 0): (-806.7805866, -1500.683512, -2489.460427),
    (5, 1): (-2489.460427, -3769.946194, -5342.999737),
    (5, 2): (-5342.999737, -7209.520922, -9370.16336),
    (5, 3): (-9370.16336, -11825.38215, -14575.49657),
    (5, 4): (-14575.49657, -17620.73484, -20961.26357),
}

# None marks cells printed as "-"
_TABLE_3 = {
    (0, 0): (None, None, -0.006591882),
    (1, 0): (-0.051095051, -0.056748905, -0.066201555),
    (2, 0): (-0.151319951, -0.1577294, -0.168286976),
    (2, 1): (-0.168286976, -0.18286666, -0.201369665),
    (3, 0): (-0.291655888, -0.298908764, -0.310765078),
    (3, 1): (-0.310765078, -0.326970774, -0.347291388),
    (3, 2): (-0.347291388, -0.371548105, -0.399625631),
    (4, 0): (-0.472024074, -0.480146418, -0.493359927),
    (4, 1): (-0.493359927, -0.51130219, -0.533626149),
    (4, 2): (-0.533626149, -0.560049273, -0.590366077),
    (4, 3): (-0.590366077, -0.62444112, -0.662195555),
    (5, 0): (-0.692404982, -0.701407183, -0.71600143),
    (5, 1): (-0.71600143, -0.735725353, -0.760129567),
    (5, 2): (-0.760129567, -0.78883907, -0.821569698),
    (5, 3): (-0.821569698, -0.858120539, -0.89835829),
    (5, 4): (-0.89835829, -0.94220149, -0.989607378),
}


@dataclass(frozen=True)
class ReferenceTable:
    table_id: int
    alpha: float
    omega: float
    lambda_adj: float
    cells: dict[tuple[int, int], tuple[Optional[float], ...]]
    reproducible: bool

    @property
    def n_max(self) -> int:
        return max(n for n, _ in self.cells)

    def problem(self) -> ProblemSpec:
        return ProblemSpec(
            potential=PotentialParams(V0=1.0, V1=0.01, V2=0.5, a=2.0, b=50.0, alpha=self.alpha),
            approx=ApproximationParams(omega=self.omega, lambda_adj=self.lambda_adj),
            mass=1.0,
            hbar=1.0,
        )

    def energy(self, n: int, l: int, D: int) -> Optional[float]:
        """Published value, None for absent or blank cells."""
        row = self.cells.get((n, l))
        if row is None or D not in DIMS:
            return None
        return row[DIMS.index(D)]


REFERENCE_TABLES: dict[int, ReferenceTable] = {
    1: ReferenceTable(1, alpha=1.0, omega=1.6, lambda_adj=3.2, cells=_TABLE_1, reproducible=True),
    2: ReferenceTable(2, alpha=5.0, omega=1.7, lambda_adj=3.3, cells=_TABLE_2, reproducible=False),
    3: ReferenceTable(3, alpha=5.0, omega=12.0, lambda_adj=3.1, cells=_TABLE_3, reproducible=False),
}


def get_table(table_id: int) -> ReferenceTable:
    try:
        return REFERENCE_TABLES[table_id]
    except KeyError:
        raise ValueError(f"No reference table {table_id} (have {sorted(REFERENCE_TABLES)})") from None
