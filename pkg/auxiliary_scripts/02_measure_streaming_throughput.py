"""
This script measures the throughput and the memory of the streaming engine, namely

- the time it takes to count the 1s in prefixes of growing length for a few director
    pairs, summarised in a performance plot
- the duration, the letters per second, the bit-packed window and the peak of the
    traced memory of a single run over ``10^9`` letters

and checks them against the targets of a desk-scale run.

NOTE: THIS SCRIPT CAN ONLY BE RUN IF THE DEVELOPER MODE IS ENABLED BY SETTING THE
      ENVIRONMENT VARIABLE ``SELF_DESCRIPTIVE_DEVELOPER`` TO ``true``.

"""

# === Imports ===

import os
import time
import tracemalloc

import perfplot
from tqdm import tqdm

from self_descriptive.generator import SEED_LENGTH, count_letters, init_generator

# === Constants ===

# the path where the performance plot is stored (relative to the current file)
PERFORMANCE_PLOT_FILE_PATH = "./files/02_streaming_throughput.svg"

# the director pairs to measure; ("2", "2") has the largest share of unread letters
DIRECTOR_PAIRS = [
    ("12", "1"),
    ("121", "12"),
    ("1122", "21"),
    ("2", "2"),
]
# the director pair whose window has to stay below the window target
WINDOW_TARGET_PAIR = ("12", "1")

# the prefix lengths of the performance plot
PERFORMANCE_NUM_LETTERS = [10**exponent for exponent in range(4, 9)]

# the number of letters of the single large run
LARGE_NUM_LETTERS = 10**9

# the targets of the large run
MIN_LETTERS_PER_SECOND = 5e7
MAX_SECONDS = 60.0
MAX_PEAK_BYTES = 256 * 2**20
MAX_WINDOW_BYTES = 128 * 2**20

# === Functions ===


def count_kernel(x1: str, x2: str):
    """
    Creates a function that counts the 1s in the first ``n`` letters of a fresh
    sequence.

    """

    def kernel(n: int) -> int:
        return count_letters(init_generator(x1=x1, x2=x2), n=n)

    return kernel


# === Main ===

if (
    __name__ == "__main__"
    and os.getenv("SELF_DESCRIPTIVE_DEVELOPER", "false").lower() == "true"
):

    # the first call compiles the kernel if Numba is available
    count_letters(init_generator(x1="12", x2="1"), n=1_000)

    # --- Performance plot ---

    timings = perfplot.bench(
        setup=lambda n: n,
        kernels=[count_kernel(x1=x1, x2=x2) for x1, x2 in DIRECTOR_PAIRS],
        labels=[f"T1 = ({x1})^ω, T2 = ({x2})^ω" for x1, x2 in DIRECTOR_PAIRS],
        n_range=PERFORMANCE_NUM_LETTERS,
        xlabel="Number of letters n",
        equality_check=None,
    )
    timings.save(
        os.path.join(os.path.dirname(__file__), PERFORMANCE_PLOT_FILE_PATH),
        transparent=False,
    )

    # --- Large run ---

    failures = []
    for x1, x2 in tqdm(DIRECTOR_PAIRS, desc="Counting 10^9 letters per pair"):
        tracemalloc.start()
        start_time = time.perf_counter()
        state = init_generator(x1=x1, x2=x2)
        count1 = count_letters(state, n=LARGE_NUM_LETTERS)
        seconds = time.perf_counter() - start_time
        _, peak_bytes = tracemalloc.get_traced_memory()
        tracemalloc.stop()

        letters_per_second = LARGE_NUM_LETTERS / seconds
        print(
            f"\n({x1}, {x2}): f1 ~ {count1 / LARGE_NUM_LETTERS:.10f} in "
            f"{seconds:.1f} s ({letters_per_second:.3e} letters/s), window "
            f"{state.window.nbytes / 2**20:.1f} MiB for "
            f"{state.window_size / 8 / 2**20:.1f} MiB of unread letters, traced "
            f"peak {peak_bytes / 2**20:.1f} MiB"
        )

        if state.window.size * 8 > 4 * (state.window_size + SEED_LENGTH + 7):
            failures.append(f"({x1}, {x2}): window out of proportion")
        if peak_bytes > MAX_PEAK_BYTES:
            failures.append(f"({x1}, {x2}): traced peak above the target")
        if (x1, x2) != WINDOW_TARGET_PAIR:
            continue

        if state.window.nbytes > MAX_WINDOW_BYTES:
            failures.append(f"({x1}, {x2}): window above the target")
        if seconds > MAX_SECONDS or letters_per_second < MIN_LETTERS_PER_SECOND:
            failures.append(f"({x1}, {x2}): throughput below the target")

    if failures:
        raise AssertionError("\n".join(failures))

    print("\nAll the targets are met.")
