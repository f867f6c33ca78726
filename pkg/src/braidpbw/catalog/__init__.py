"""Named worked examples with their recorded relations and deformation data."""

from .examples import (DESCRIPTIONS, NAMES, ExampleBundle, build_example, default_uq_ansatz,
                       expected_data, kc2_r_matrix, sklyanin_warnings, sweedler_r_matrix)

__all__ = ["DESCRIPTIONS", "NAMES", "ExampleBundle", "build_example", "default_uq_ansatz",
           "expected_data", "kc2_r_matrix", "sklyanin_warnings", "sweedler_r_matrix"]
