"""Acceptance gate: ten numbered criteria, one printed line each.

Each test measures its criterion independently of the package's own
verification suite, announces PASS or FAIL on a line of its own, then
asserts.  Bounds are pinned here and never loosened to fit the build:
two criteria are currently not attainable by the implementation they
describe (see the assertion messages) and stay red on purpose.
"""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from ermakov import analytic, cli, core, integrators, madelung, models, \
    thermal
from ermakov.core import PhysicalParams, State, State3
from ermakov.integrators import IntegratorConfig, Scheme, StopReason
from ermakov.models import ModelVariant
from ermakov.thermal import BetaGrid, ThermalField, ThermalVariant

NATURAL = core.make_natural_params(0.0, 0.0, 0.0)


@pytest.fixture
def announce(capsys):
    def _say(num, label, ok, detail):
        with capsys.disabled():
            mark = "PASS" if ok else "FAIL"
            print(f"\ncriterion {num:02d} {mark} {label}: {detail}")
    return _say


def _energy_rows(states, params):
    sig, vel = states[:, 0], states[:, 1]
    return (0.5 * params.m * vel ** 2
            + 0.5 * params.m * params.omega0 ** 2 * sig ** 2
            + params.hbar ** 2 / (8.0 * params.m * sig ** 2))


def _simpson(values, spacing):
    n = values.size
    weights = np.ones(n)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    return float(np.sum(weights * values) * spacing / 3.0)


def _max_rel(got, ref):
    return float(np.max(np.abs(got - ref) / np.abs(ref)))


def test_criterion_01_free_particle_spreading(announce):
    params = PhysicalParams(omega0=0.0)
    cfg = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    traj, reason = integrators.integrate(
        ModelVariant.CONSERVATIVE, State(1.0, 0.0), (0.0, 10.0),
        params, cfg)
    assert reason is StopReason.COMPLETED
    ts = np.linspace(0.0, 10.0, 201)
    got = traj.sample(ts)[:, 0] ** 2
    ref = 1.0 + (ts / 2.0) ** 2
    meas = _max_rel(got, ref)
    ok = meas <= 1e-8
    announce(1, "free-particle spreading law",
             ok, f"max rel deviation {meas:.3e}, bound 1e-8")
    assert ok


def test_criterion_02_closed_form_oracle(announce):
    rng = np.random.default_rng(415)
    t_end = 20.0 * math.pi
    cfg = IntegratorConfig(rel_tol=1e-12, abs_tol=1e-15)
    worst_traj = 0.0
    worst_res = 0.0
    for _ in range(20):
        s0 = float(rng.uniform(0.1, 10.0))
        v0 = float(rng.uniform(-2.0, 2.0))
        traj, reason = integrators.integrate(
            ModelVariant.CONSERVATIVE, State(s0, v0), (0.0, t_end),
            NATURAL, cfg)
        assert reason is StopReason.COMPLETED
        ts = np.sort(np.concatenate(([0.0, t_end],
                                     rng.uniform(0.0, t_end, 48))))
        got = traj.sample(ts)[:, 0]
        ref = np.array([analytic.pinney_solution(t, s0, v0, NATURAL).sigma
                        for t in ts])
        worst_traj = max(worst_traj, _max_rel(got, ref))
        for t in np.linspace(0.0, t_end, 101):
            st = analytic.pinney_solution(float(t), s0, v0, NATURAL)
            acc = analytic.pinney_acceleration(float(t), s0, v0, NATURAL)
            res = models.residual(ModelVariant.CONSERVATIVE, st, NATURAL,
                                  sigma_ddot=acc)
            scale = max(1.0, abs(NATURAL.m * acc))
            worst_res = max(worst_res, abs(res) / scale)
    ok = worst_traj <= 1e-8 and worst_res <= 1e-10
    announce(2, "oscillator width closed form",
             ok, f"integrator gap {worst_traj:.3e} (bound 1e-8), "
                 f"closed-form defect {worst_res:.3e} (bound 1e-10)")
    assert worst_traj <= 1e-8
    assert worst_res <= 1e-10


def test_criterion_03_energy_first_integral(announce):
    cfg = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    worst_cons = 0.0
    for s0, v0 in ((2.0, 0.0), (1.3, 0.4), (0.5, -0.5)):
        traj, reason = integrators.integrate(
            ModelVariant.CONSERVATIVE, State(s0, v0), (0.0, 20.0),
            NATURAL, cfg)
        assert reason is StopReason.COMPLETED
        es = _energy_rows(traj.states, NATURAL)
        worst_cons = max(worst_cons,
                         float(np.max(np.abs(es - es[0])) / abs(es[0])))
    damped = core.make_natural_params(0.5, 0.0, 0.0)
    traj, reason = integrators.integrate(
        ModelVariant.DISSIPATIVE, State(2.0, 0.0), (0.0, 10.0),
        damped, cfg)
    assert reason is StopReason.COMPLETED
    ts = np.linspace(0.0, 10.0, 8001)
    got = traj.sample(ts)
    es = _energy_rows(got, damped)
    lost = _simpson(damped.b * got[:, 1] ** 2, ts[1] - ts[0])
    balance = abs(es[-1] - es[0] + lost) / abs(es[0])
    ok = worst_cons <= 1e-8 and balance <= 1e-6
    announce(3, "energy bookkeeping",
             ok, f"conservation {worst_cons:.3e} (bound 1e-8), "
                 f"friction balance {balance:.3e} (bound 1e-6)")
    assert worst_cons <= 1e-8
    assert balance <= 1e-6


def test_criterion_04_strong_friction_relaxation(announce):
    params = core.make_natural_params(10.0, 0.0, 0.0)
    cfg = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    seed = analytic.overdamped_relaxation(0.05, params)
    traj, reason = integrators.integrate_overdamped(
        ModelVariant.OVERDAMPED_DISSIPATIVE, seed.sigma, (0.05, 3.0),
        params, cfg)
    assert reason is StopReason.COMPLETED
    ts = np.linspace(0.05, 3.0, 200)
    ref = np.array([analytic.overdamped_relaxation(t, params).sigma
                    for t in ts]) ** 2
    first_order = _max_rel(traj.sample(ts)[:, 0] ** 2, ref)

    stiff = core.make_natural_params(100.0, 0.0, 0.0)
    seed = analytic.overdamped_relaxation(0.05, stiff)
    cfg2 = IntegratorConfig(rel_tol=1e-8, abs_tol=1e-11,
                            scheme=Scheme.TRBDF2)
    traj2, reason = integrators.integrate(
        ModelVariant.DISSIPATIVE, State(seed.sigma, seed.sigma_dot),
        (0.05, 3.0), stiff, cfg2)
    assert reason is StopReason.COMPLETED
    ref2 = np.array([analytic.overdamped_relaxation(t, stiff).sigma
                     for t in ts]) ** 2
    second_order = _max_rel(traj2.sample(ts)[:, 0] ** 2, ref2)

    ok = first_order <= 1e-6 and second_order <= 1e-3
    announce(4, "strong-friction relaxation",
             ok, f"first-order run {first_order:.3e} (bound 1e-6), "
                 f"inertial run at friction 100 {second_order:.3e} "
                 f"(bound 1e-3)")
    assert first_order <= 1e-6
    # Not attainable: the inertial model follows a slow manifold that
    # sits a visible O(1/b) offset away from the first-order closed
    # form near the start of the span, measured at 2.9e-2.
    assert second_order <= 1e-3


def test_criterion_05_subdiffusion(announce):
    params = PhysicalParams(omega0=0.0, b=10.0)
    cfg = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    seed = analytic.subdiffusion(0.1, params)
    traj, reason = integrators.integrate_overdamped(
        ModelVariant.OVERDAMPED_DISSIPATIVE, seed.sigma, (0.1, 10.0),
        params, cfg)
    assert reason is StopReason.COMPLETED
    ts = np.linspace(0.1, 10.0, 200)
    ref = np.array([analytic.subdiffusion(t, params).sigma
                    for t in ts]) ** 2
    meas = _max_rel(traj.sample(ts)[:, 0] ** 2, ref)
    ok = meas <= 1e-6
    announce(5, "trap-free square-root growth",
             ok, f"max rel deviation {meas:.3e}, bound 1e-6")
    assert ok


WINDOW = (0.6, 3.9)


def _interior_defect(variant, count, params):
    grid = BetaGrid.from_range(0.5, 4.0, count)
    field = thermal.equilibrium_profile_coth(grid, params)
    res = thermal.equilibrium_residual(variant, field, params)
    mask = (grid.nodes >= WINDOW[0] - 1e-12) \
        & (grid.nodes <= WINDOW[1] + 1e-12)
    return float(np.max(np.abs(res[mask]))), grid.delta


def test_criterion_06_thermal_equilibria(announce):
    params = core.make_natural_params(0.0, 1.0, 0.0)
    bounds = {ThermalVariant.BETA_DERIVATIVE: 7e-3,
              ThermalVariant.INTEGRAL_FORM: 1.3e-2}
    stationary = {}
    orders = {}
    drift = {}
    for variant, bound in bounds.items():
        defects, deltas = zip(*(_interior_defect(variant, n, params)
                                for n in (36, 71, 141)))
        stationary[variant] = defects[1]
        orders[variant] = float(np.polyfit(np.log(deltas),
                                           np.log(defects), 1)[0])
        grid = BetaGrid.from_range(0.5, 4.0, 71)
        field0 = thermal.equilibrium_profile_coth(grid, params)
        if variant is ThermalVariant.BETA_DERIVATIVE:
            # an undamped hold is ill-posed for the slope form (edge
            # stencils pump the shortest waves), so the hold runs with
            # strong friction and watches the slow creep instead
            run_params = core.make_natural_params(80.0, 1.0, 0.0)
            cfg = IntegratorConfig(rel_tol=1e-9, abs_tol=1e-12,
                                   scheme=Scheme.TRBDF2)
        else:
            run_params = params
            cfg = IntegratorConfig(rel_tol=1e-9, abs_tol=1e-12)
        traj, reason = thermal.integrate_thermal(
            variant, field0, (0.0, 10.0), run_params, cfg)
        assert reason is StopReason.COMPLETED
        drift[variant] = float(np.max(np.abs(traj.sigma
                                             - field0.sigma[None, :])))
    slope, integral = ThermalVariant.BETA_DERIVATIVE, \
        ThermalVariant.INTEGRAL_FORM
    ok = (stationary[slope] <= bounds[slope]
          and stationary[integral] <= bounds[integral]
          and abs(orders[slope] - 2.0) <= 0.2
          and abs(orders[integral] - 2.0) <= 0.2
          and drift[slope] <= 5.0 * bounds[slope]
          and drift[integral] <= 5.0 * bounds[integral])
    announce(6, "thermal equilibrium discretisations",
             ok, f"slope form: defect {stationary[slope]:.3e}, order "
                 f"{orders[slope]:.3f}, drift {drift[slope]:.3e}; "
                 f"integral form: defect {stationary[integral]:.3e}, "
                 f"order {orders[integral]:.3f}, drift "
                 f"{drift[integral]:.3e}; order band 2.0 +- 0.2")
    assert stationary[slope] <= bounds[slope]
    assert stationary[integral] <= bounds[integral]
    assert drift[slope] <= 5.0 * bounds[slope]
    assert drift[integral] <= 5.0 * bounds[integral]
    assert abs(orders[slope] - 2.0) <= 0.2
    # Not attainable: the integral form's leading quadrature panel adds
    # a fixed defect that refinement cannot remove, so its observed
    # order is about 0 instead of 2 (defect near 1.06e-2 on every grid).
    assert abs(orders[integral] - 2.0) <= 0.2


def test_criterion_07_thermal_limit_behaviour(announce):
    params = core.make_natural_params(0.0, 1.0, 0.0)

    grid = BetaGrid(beta_min=0.01, delta=5e-5, count=2201)
    field = thermal.equilibrium_profile_coth(grid, params)
    sig = field.sigma
    slope_term = (thermal.thermal_term_beta_derivative(sig, grid, params)
                  + params.hbar ** 2 / (4.0 * params.m ** 2 * sig ** 3))
    integral_term = thermal.thermal_term_integral(sig, grid, params)
    rhs = (1.0 / (params.m * grid.nodes * sig)
           + params.hbar ** 2 / (4.0 * params.m ** 2 * sig ** 3))
    hot = 0.0
    for target in (0.01, 0.02, 0.05, 0.1):
        j = int(round((target - grid.beta_min) / grid.delta))
        allowance = 2.0 * (grid.nodes[j] * params.hbar
                           * params.omega0) ** 2
        for term in (slope_term, integral_term):
            hot = max(hot, abs(term[j] - rhs[j]) / abs(rhs[j]) / allowance)

    grid = BetaGrid(beta_min=0.02, delta=0.015, count=2068)
    field = thermal.equilibrium_profile_coth(grid, params)
    sig = field.sigma
    quantum = params.hbar ** 2 / (4.0 * params.m ** 2 * sig ** 3)
    cold_nodes = grid.nodes * params.hbar * params.omega0 >= 30.0
    slope_term = thermal.thermal_term_beta_derivative(sig, grid, params)
    integral_term = thermal.thermal_term_integral(sig, grid, params)
    cold = max(
        float(np.max(np.abs(slope_term[cold_nodes])
                     / quantum[cold_nodes])),
        float(np.max(np.abs(integral_term[cold_nodes]
                            - quantum[cold_nodes]) / quantum[cold_nodes])))

    closed = 0.0
    for beta in (0.01, 0.1, 1.0, 10.0, 1000.0):
        for m in (0.5, 2.0):
            for omega0 in (0.7, 3.0):
                p = PhysicalParams(m=m, omega0=omega0, hbar=1.3, beta=beta)
                x = beta * p.hbar * omega0
                expected = (math.sqrt(1.0 + x * x) + 1.0) \
                    / (2.0 * beta * m * omega0 ** 2)
                closed = max(closed, abs(
                    analytic.equilibrium_high_temperature(p)
                    / expected - 1.0))

    limits = 0.0
    for beta in (30.0, 100.0, 1000.0):
        p = PhysicalParams(beta=beta)
        gap = (analytic.equilibrium_high_temperature(p)
               / core.ground_state_sigma(p) ** 2 - 1.0)
        limits = max(limits, abs(gap * beta - 1.0))
    p = PhysicalParams(beta=0.01)
    classical = 1.0 / (0.01 * p.m * p.omega0 ** 2)
    ratio = analytic.equilibrium_high_temperature(p) / classical
    limits = max(limits, abs(ratio - 1.0) / 0.01 ** 2 / 5.0)

    ok = hot <= 1.0 and cold <= 1e-6 and closed <= 1e-12 and limits <= 0.1
    announce(7, "hot and cold limits of the thermal forms",
             ok, f"hot-side gap over allowance {hot:.3e} (bound 1), "
                 f"cold corrections {cold:.3e} (bound 1e-6), closed form "
                 f"{closed:.3e} (bound 1e-12), limit orders {limits:.3e}")
    assert hot <= 1.0
    assert cold <= 1e-6
    assert closed <= 1e-12
    assert limits <= 0.1


def test_criterion_08_radiative_models(announce):
    params = core.make_natural_params(0.0, 0.0, 0.01)
    cfg = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-13)
    s0 = 2.0 * core.ground_state_sigma(params)
    traj, reason = integrators.integrate(
        ModelVariant.RADIATIVE_REDUCED, State(s0, 0.0), (0.0, 500.0),
        params, cfg)
    assert reason is StopReason.COMPLETED
    ground = 0.5 * params.hbar * params.omega0
    decay = abs(_energy_rows(traj.states[-1:], params)[0] / ground - 1.0)

    base = models.acceleration(ModelVariant.CONSERVATIVE, State(s0, 0.0),
                               params)
    _, reason2 = integrators.integrate(
        ModelVariant.RADIATIVE_NAIVE, State3(s0, 0.0, base + 0.1),
        (0.0, 5.0), params, IntegratorConfig(rel_tol=1e-9, abs_tol=1e-12))
    runaway = reason2 is StopReason.RUNAWAY_DETECTED

    cfg3 = IntegratorConfig(rel_tol=1e-11, abs_tol=1e-14)
    ts = np.linspace(0.0, 5.0, 101)
    ref_traj, _ = integrators.integrate(
        ModelVariant.CONSERVATIVE, State(s0, 0.0), (0.0, 5.0), NATURAL,
        cfg3)
    ref = ref_traj.sample(ts)[:, 0]
    errs = []
    for eps in (1e-2, 1e-3, 1e-4):
        p = core.make_natural_params(0.0, 0.0, eps)
        tr, reason3 = integrators.integrate(
            ModelVariant.RADIATIVE_REDUCED, State(s0, 0.0), (0.0, 5.0),
            p, cfg3)
        assert reason3 is StopReason.COMPLETED
        errs.append(float(np.max(np.abs(tr.sample(ts)[:, 0] - ref))))
    ratio = max(errs[1] / errs[0], errs[2] / errs[1])

    ok = decay <= 1e-4 and runaway and ratio <= 0.15
    announce(8, "radiative decay, runaway, and small-coupling limit",
             ok, f"ground-energy gap {decay:.3e} (bound 1e-4) at the "
                 f"pinned horizon 500, runaway detected {runaway}, "
                 f"decade error ratio {ratio:.3e} (bound 0.15)")
    assert decay <= 1e-4
    assert runaway
    assert ratio <= 0.15


def test_criterion_09_hydrodynamic_consistency(announce):
    rng = np.random.default_rng(909)
    cont = 0.0
    for _ in range(30):
        snap = madelung.GaussianSnapshot(
            sigma=float(rng.uniform(0.5, 3.0)),
            sigma_dot=float(rng.uniform(-2.0, 2.0)))
        xs = madelung.SpatialGrid(sigma=snap.sigma).nodes
        cont = max(cont, float(np.max(np.abs(
            madelung.continuity_residual(xs, snap)))))

    spread = 0.0
    for _ in range(15):
        snap = madelung.GaussianSnapshot(
            sigma=float(rng.uniform(0.5, 3.0)),
            sigma_dot=float(rng.uniform(-2.0, 2.0)))
        accel = float(rng.uniform(-3.0, 3.0))
        xs = madelung.SpatialGrid(sigma=snap.sigma).nodes
        keep = np.abs(xs) > 0.1 * snap.sigma
        res = madelung.force_balance_residual(xs[keep], snap, NATURAL,
                                              sigma_ddot=accel)
        ratio = res * snap.sigma / xs[keep]
        expected = models.residual(ModelVariant.CONSERVATIVE,
                                   State(snap.sigma, snap.sigma_dot),
                                   NATURAL, sigma_ddot=accel)
        scale = max(1.0, abs(expected))
        spread = max(spread, float(ratio.max() - ratio.min()) / scale)

    audit = 0.0
    damped = core.make_natural_params(0.7, 0.0, 0.0)
    cfg = IntegratorConfig(rel_tol=1e-12, abs_tol=1e-15)
    for variant, p in ((ModelVariant.CONSERVATIVE, NATURAL),
                       (ModelVariant.DISSIPATIVE, damped)):
        traj, reason = integrators.integrate(variant, State(1.3, 0.4),
                                             (0.0, 10.0), p, cfg)
        assert reason is StopReason.COMPLETED
        for s, sd in traj.sample(np.sort(rng.uniform(0.0, 10.0, 100))):
            snap = madelung.GaussianSnapshot(sigma=float(s),
                                             sigma_dot=float(sd))
            xs = madelung.SpatialGrid(sigma=snap.sigma).nodes
            audit = max(
                audit,
                float(np.max(np.abs(
                    madelung.continuity_residual(xs, snap)))),
                float(np.max(np.abs(madelung.force_balance_residual(
                    xs, snap, p, variant=variant)))))

    tparams = core.make_natural_params(0.0, 1.0, 0.0)
    tgrid = BetaGrid.from_range(0.5, 4.0, 71)
    tfield = thermal.equilibrium_profile_coth(tgrid, tparams)
    thermal_worst = 0.0
    for j in (1, 35, 69):
        xs = madelung.SpatialGrid(sigma=float(tfield.sigma[j])).nodes
        thermal_worst = max(thermal_worst, float(np.max(np.abs(
            madelung.force_balance_residual_thermal(xs, tfield, j,
                                                    tparams)))))

    ok = (cont <= 1e-12 and spread <= 1e-10 and audit <= 1e-10
          and thermal_worst <= 1e-10)
    announce(9, "packet hydrodynamics reduce to the width models",
             ok, f"continuity {cont:.3e} (bound 1e-12), factorisation "
                 f"spread {spread:.3e} (bound 1e-10), trajectory audit "
                 f"{audit:.3e} (bound 1e-10), thermal closure "
                 f"{thermal_worst:.3e} (bound 1e-10)")
    assert cont <= 1e-12
    assert spread <= 1e-10
    assert audit <= 1e-10
    assert thermal_worst <= 1e-10


def _cli_subprocess(argv, cwd):
    code = ("import sys\n"
            "from ermakov.cli import main\n"
            "sys.exit(main(sys.argv[1:]))\n")
    return subprocess.run([sys.executable, "-c", code] + argv,
                          cwd=cwd, capture_output=True, text=True)


def test_criterion_10_cli_determinism_and_mutation_gate(
        announce, tmp_path, monkeypatch):
    config = tmp_path / "run.json"
    config.write_text(json.dumps({
        "model": "dissipative",
        "params": {"natural": {"friction": 0.5}},
        "initial": {"sigma": 2.0},
        "t_span": [0.0, 10.0],
        "samples": 101,
    }), encoding="utf-8")
    digests = []
    for sub in ("a", "b"):
        (tmp_path / sub).mkdir()
        proc = _cli_subprocess(["simulate", "--config", str(config),
                                "--out", str(tmp_path / sub), "--quiet"],
                               str(tmp_path))
        assert proc.returncode == 0, proc.stderr
        digests.append((tmp_path / sub / "trajectory.csv").read_bytes())
    identical = digests[0] == digests[1]

    proc = _cli_subprocess(["verify", "all", "--jobs", "8", "--quiet",
                            "--out", str(tmp_path)], str(tmp_path))
    clean_exit = proc.returncode

    # Three seeded faults, each driven through the command entry point
    # against the suites that audit the touched operator; the exit-code
    # path is the same one a full run takes.
    mutation_exits = []

    def pressureless(sigma, params):
        return -params.omega0 ** 2 * sigma

    with monkeypatch.context() as m:
        m.setattr(models, "conservative_acceleration", pressureless)
        mutation_exits.append(cli.main(
            ["verify", "free-particle", "--quiet", "--out",
             str(tmp_path)]))

    real_derivative = thermal.beta_derivative

    def lopsided(values, grid):
        out = real_derivative(values, grid)
        v = np.asarray(values, dtype=float)
        out[1:-1] = (v[2:] - v[1:-1]) / grid.delta
        return out

    with monkeypatch.context() as m:
        m.setattr(thermal, "beta_derivative", lopsided)
        mutation_exits.append(cli.main(
            ["verify", "thermal-limits", "--quiet", "--out",
             str(tmp_path)]))

    real_jerk = models.radiative_jerk

    def backwards(state, params):
        return -real_jerk(state, params)

    with monkeypatch.context() as m:
        m.setattr(models, "radiative_jerk", backwards)
        mutation_exits.append(cli.main(
            ["verify", "radiative", "--quiet", "--out", str(tmp_path)]))

    ok = (identical and clean_exit == 0
          and all(rc == 3 for rc in mutation_exits))
    announce(10, "deterministic output and self-check sensitivity",
             ok, f"byte-identical rerun {identical}, clean verify exit "
                 f"{clean_exit}, mutation exits {mutation_exits} "
                 f"(want all 3)")
    assert identical
    assert clean_exit == 0
    assert mutation_exits == [3, 3, 3]
