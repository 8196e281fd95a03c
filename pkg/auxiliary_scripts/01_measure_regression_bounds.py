"""
This script measures the finite-prefix quantities that the test suite freezes as
regression bounds, namely

- the errors of the empirical frequencies of the letter 1 in ``u`` and ``δ`` at the
    powers of 10 for a few director pairs
- the max-norms of the block residuals ``e_n`` over the levels of the same pairs

The measurements are printed and summarised in a diagnostic plot.

NOTE: THIS SCRIPT CAN ONLY BE RUN IF THE DEVELOPER MODE IS ENABLED BY SETTING THE
      ENVIRONMENT VARIABLE ``SELF_DESCRIPTIVE_DEVELOPER`` TO ``true``.

"""

# === Imports ===

import os

import numpy as np
from matplotlib import pyplot as plt
from tqdm import tqdm

from self_descriptive.analysis import directing_empirical, empirical_frequency
from self_descriptive.blocks import residual_norm, residual_table

# === Constants ===

# the path where the diagnostic plot is stored (relative to the current file)
DIAGNOSTIC_PLOT_FILE_PATH = "./files/01_regression_bounds.svg"

# the director pairs to measure
DIRECTOR_PAIRS = [
    ("12", "1"),
    ("121", "12"),
    ("1122", "11"),
    ("112", "21"),
]
# the largest prefix length as a power of 10
MAX_EXPONENT = 7
# the number of block levels
NUM_LEVELS = 31


# === Main ===

if (
    __name__ == "__main__"
    and os.getenv("SELF_DESCRIPTIVE_DEVELOPER", "false").lower() == "true"
):

    # --- Measurements ---

    checkpoints = [10**exponent for exponent in range(3, MAX_EXPONENT + 1)]
    u_errors = {}
    delta_errors = {}
    residual_norms = {}
    for pair in tqdm(DIRECTOR_PAIRS, desc="Measuring director pairs"):
        x1, x2 = pair
        u_report = empirical_frequency(
            x1, x2, n=checkpoints[-1], checkpoints=checkpoints
        )
        delta_report = directing_empirical(
            x1, x2, runs=checkpoints[-1], checkpoints=checkpoints
        )
        u_errors[pair] = np.array([row.err for row in u_report])
        delta_errors[pair] = np.array([row.err for row in delta_report])
        residual_norms[pair] = np.array(
            [
                float(residual_norm(e_n))
                for _, e_n in residual_table(x1, x2, levels=NUM_LEVELS)[:-1]
            ]
        )

    for pair in DIRECTOR_PAIRS:
        print(
            f"\n{pair}: u errors {u_errors[pair]}, delta errors {delta_errors[pair]}, "
            f"max residual norm {residual_norms[pair][1:].max():.4f} (levels 1 to "
            f"{NUM_LEVELS - 2})"
        )

    # --- Diagnostic plot ---

    fig, ax = plt.subplots(
        ncols=2,
        figsize=(14, 6),
    )

    for pair in DIRECTOR_PAIRS:
        label = f"T1 = ({pair[0]})^ω, T2 = ({pair[1]})^ω"
        (line,) = ax[0].loglog(  # type: ignore
            checkpoints,
            u_errors[pair],
            marker="o",
            label=f"u, {label}",
        )
        ax[0].loglog(  # type: ignore
            checkpoints,
            delta_errors[pair],
            marker="x",
            linestyle="--",
            color=line.get_color(),
            label=f"δ, {label}",
        )
        ax[1].plot(  # type: ignore
            np.arange(residual_norms[pair].size),
            residual_norms[pair],
            marker=".",
            label=label,
        )

    ax[0].set_xlabel("Prefix length n")  # type: ignore
    ax[0].set_ylabel("Absolute error of the frequency of the letter 1")  # type: ignore
    ax[0].legend(fontsize=8)  # type: ignore
    ax[1].set_xlabel("Block level n")  # type: ignore
    ax[1].set_ylabel("Max-norm of the residual e_n")  # type: ignore
    ax[1].legend(fontsize=8)  # type: ignore

    plt.tight_layout()
    plt.savefig(os.path.join(os.path.dirname(__file__), DIAGNOSTIC_PLOT_FILE_PATH))
    plt.show()
