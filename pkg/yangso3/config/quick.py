from types import SimpleNamespace

order = 4
depth = 1
points = ["1/3"]
suites = ["all"]
format = "text"
mutate = None
seed = 0
mode_bound = 2
verbose = False

rmatrix = SimpleNamespace(
    sizes=[3],
    sample_points=2,
)

oracle = SimpleNamespace(
    enabled=True,
)

report = SimpleNamespace(
    timings=False,
)
