from types import SimpleNamespace

# Acceptance parameters: K = 8 on two evaluation factors at 0 and 1/3.
order = 8
depth = 2
points = ["0", "1/3"]
suites = ["all"]
format = "json"
mutate = None
seed = 0
mode_bound = 6
verbose = False

rmatrix = SimpleNamespace(
    sizes=[3, 4, 5],
    sample_points=5,
)

oracle = SimpleNamespace(
    enabled=True,
)

report = SimpleNamespace(
    timings=False,
)
