"""JSON run reports and the seeded benchmark sweep."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .augment import Solution, solve
from .connectivity import is_k_connected
from .generators import gen_random_k_connected, gen_unit_disk
from .graph import Graph
from .oracle import exact_min_km_cds

SCHEMA_VERSION = 1


@dataclass
class RunReport:
    instance: str
    n: int
    edges: int
    max_degree: int
    k: int
    m: int
    c0_size: int
    c_size: int
    bound: int
    certificate: dict
    trace: dict
    wall_time: float
    opt: int | None = None
    opt1: int | None = None
    solution: list[int] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    @property
    def ratio(self) -> float | None:
        return self.c_size / self.opt if self.opt else None

    @property
    def ratio_bound(self) -> float | None:
        """(2k-1) |C0| / opt1: the guarantee relative to the best (1,m)-CDS."""
        return (2 * self.k - 1) * self.c0_size / self.opt1 if self.opt1 else None

    def problems(self) -> list[str]:
        out = []
        if not self.certificate.get("is_valid"):
            out.append("certificate invalid")
        if self.c_size > self.bound and not self.trace.get("fallback"):
            out.append(f"|C|={self.c_size} exceeds (2k-1)|C0|={self.bound}")
        if self.c_size > self.n:
            out.append("|C| exceeds n")
        if self.opt is not None and self.c_size < self.opt:
            out.append(f"|C|={self.c_size} below the exact optimum {self.opt}")
        if self.opt is not None and self.opt1:
            # |C|/opt <= (2k-1)|C0|/opt1, cross-multiplied to stay in integers
            if self.c_size * self.opt1 > (2 * self.k - 1) * self.c0_size * self.opt:
                out.append("ratio exceeds (2k-1)|C0|/opt1")
        return out

    def to_dict(self) -> dict:
        data = asdict(self)
        data["ratio"] = self.ratio
        data["ratio_bound"] = self.ratio_bound
        return data


def build_report(
    instance: str,
    g: Graph,
    sol: Solution,
    wall_time: float,
    opt: int | None = None,
    opt1: int | None = None,
    full_trace: bool = False,
) -> RunReport:
    trace = sol.trace.summary()
    if full_trace:
        trace["steps"] = [step.as_dict() for step in sol.trace.steps]
    return RunReport(
        instance=instance,
        n=g.n,
        edges=g.number_of_edges(),
        max_degree=g.max_degree(),
        k=sol.k,
        m=sol.m,
        c0_size=len(sol.c0),
        c_size=len(sol.c),
        bound=sol.bound,
        certificate=sol.certificate.as_dict(),
        trace=trace,
        wall_time=wall_time,
        opt=opt,
        opt1=opt1,
        solution=sorted(sol.c),
    )


@dataclass(frozen=True)
class BenchInstance:
    instance: str
    family: str
    n: int
    k: int
    m: int
    seed: int
    edge_prob: float = 0.0
    radius: float = 0.0


def bench_corpus(
    trials: int,
    seed: int,
    n_range: tuple[int, int] = (10, 60),
    ks: tuple[int, ...] = (2, 3, 4),
    m_extra: int = 2,
    edge_probs: tuple[float, ...] = (0.0, 0.03, 0.08, 0.15, 0.3),
    family: str = "random",
) -> list[BenchInstance]:
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        k = rng.choice(ks)
        n = rng.randint(max(n_range[0], k + 1), max(n_range[1], k + 1))
        m = rng.randint(k, k + m_extra)
        inst_seed = rng.randrange(2**31)
        fam = family if family != "mixed" else rng.choice(["random", "udg"])
        if fam == "udg":
            radius = rng.uniform(0.3, 0.6)
            out.append(BenchInstance(f"udg-{t:05d}", fam, n, k, m, inst_seed, radius=radius))
        else:
            p = rng.choice(edge_probs)
            out.append(BenchInstance(f"rand-{t:05d}", fam, n, k, m, inst_seed, edge_prob=p))
    return out


def make_graph(inst: BenchInstance) -> Graph:
    if inst.family == "udg":
        return gen_unit_disk(inst.n, inst.radius, inst.seed)[0]
    return gen_random_k_connected(inst.n, inst.k, inst.edge_prob, inst.seed)


def run_instance(inst: BenchInstance, exact_max_n: int = 0, budget: int = 10**7) -> RunReport | None:
    """Solve one corpus instance; None when a unit disk draw is not k-connected."""
    g = make_graph(inst)
    if not is_k_connected(g, inst.k):
        return None
    start = time.perf_counter()
    sol = solve(g, inst.k, inst.m)
    elapsed = time.perf_counter() - start
    opt = opt1 = None
    if g.n <= exact_max_n:
        exact = exact_min_km_cds(g, inst.k, inst.m, budget)
        exact1 = exact_min_km_cds(g, 1, inst.m, budget)
        opt, opt1 = exact.opt_size, exact1.opt_size
    return build_report(inst.instance, g, sol, elapsed, opt, opt1)


def _run(args: tuple[BenchInstance, int, int]) -> RunReport | None:
    return run_instance(*args)


def run_bench(
    corpus: list[BenchInstance], exact_max_n: int = 0, budget: int = 10**7, workers: int = 1
) -> list[RunReport]:
    jobs = [(inst, exact_max_n, budget) for inst in corpus]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run, jobs, chunksize=4))
    else:
        results = [_run(job) for job in jobs]
    return sorted((r for r in results if r is not None), key=lambda r: r.instance)


CSV_COLUMNS = [
    "instance", "n", "edges", "max_degree", "k", "m", "c0_size", "c_size", "bound",
    "opt", "opt1", "ratio", "ratio_bound", "valid", "adjusted", "wall_time",
]


def summary_csv(reports: list[RunReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        adjusted = sum(level["adjusted"] for level in r.trace["levels"])
        writer.writerow([
            r.instance, r.n, r.edges, r.max_degree, r.k, r.m, r.c0_size, r.c_size, r.bound,
            "" if r.opt is None else r.opt,
            "" if r.opt1 is None else r.opt1,
            "" if r.ratio is None else f"{r.ratio:.4f}",
            "" if r.ratio_bound is None else f"{r.ratio_bound:.4f}",
            int(bool(r.certificate["is_valid"])), adjusted, f"{r.wall_time:.4f}",
        ])
    return buf.getvalue()
