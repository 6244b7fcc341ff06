import os
import psutil
from fractions import Fraction
from multiprocessing import cpu_count

max_threads = int(max(psutil.cpu_count(logical=False) or cpu_count(), 1))
pool_workers = max_threads

default_digits = int(os.environ.get("LERCHLIB_DIGITS", 30))
deep_digits = 60
guard_digits = 5
max_digits = 1000

bernoulli_cap = 2000
em_term_cap = 600
muller_max_iter = 200
muller_max_drift = 1
certify_radius = Fraction(1, 20)

boundary_nudge = Fraction(1, 1000)
min_edge_step = Fraction(1, 10 ** 10)
max_arg_step = 0.75
online_tol = 1e-9
pair_tol = 1e-4
deviation_window_factor = 8
annulus_r0 = 0.05
series_margin = 0.1
