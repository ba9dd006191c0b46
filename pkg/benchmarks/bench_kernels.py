"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints per-call times for each kernel and an end-to-end simulator step rate
(the latter measured in a subprocess per backend, since the backend is fixed
at import time).
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from quadlab import _pykernels

try:
    from quadlab import _ckernels
except ImportError:
    _ckernels = None

SIM_SNIPPET = """
import time, numpy as np
from quadlab.sim import QuadSim
from quadlab.nn import GruEncoder, gru_step
from quadlab import kernels
sim = QuadSim(seed=0)
enc = GruEncoder(sim.obs_dim, 32, seed=0)
rng = np.random.default_rng(0)
acts = rng.uniform(-1, 1, (5000, 8))
t = time.perf_counter()
for a in acts:
    gru_step(enc, sim.step(a).obs)
print(kernels.BACKEND, 5000 / (time.perf_counter() - t))
"""


def kernel_cases():
    rng = np.random.default_rng(0)
    w_in, w_rec, b = rng.normal(size=(96, 14)), rng.normal(size=(96, 32)), rng.normal(size=96)
    h, x = np.zeros(32), rng.normal(size=14)
    servo = np.ascontiguousarray(rng.uniform(-1, 1, 8))
    prev = np.ascontiguousarray(rng.normal(scale=0.05, size=(4, 2)))
    return {
        "wrap_angle": lambda k: k.wrap_angle(7.5),
        "leg_fk": lambda k: k.leg_fk(0.3, -0.2, 0.1, 0.1),
        "gru_step (h=32, x=14)": lambda k: k.gru_step(w_in, w_rec, b, h, x),
        "body_kinematics": lambda k: k.body_kinematics(servo, prev, 0.1, 0.1, 0.2, 0.005),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20000)
    args = ap.parse_args()

    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'kernel':24s}" + "".join(f"{n:>14s}" for n, _ in backends) + ("   speedup" if _ckernels else ""))
    for name, fn in kernel_cases().items():
        times = [min(timeit.repeat(lambda: fn(mod), number=args.repeat, repeat=3)) / args.repeat
                 for _, mod in backends]
        line = f"{name:24s}" + "".join(f"{t * 1e6:11.2f} us" for t in times)
        if len(times) == 2:
            line += f"   {times[0] / times[1]:6.1f}x"
        print(line)

    print("\nsimulator step + encoder step:")
    for name, _ in backends:
        env = dict(os.environ, QUADLAB_KERNELS=name)
        out = subprocess.run([sys.executable, "-c", SIM_SNIPPET], env=env, capture_output=True, text=True, check=True)
        backend, rate = out.stdout.split()
        print(f"  {backend:8s} {float(rate):10.0f} steps/s")


if __name__ == "__main__":
    main()
