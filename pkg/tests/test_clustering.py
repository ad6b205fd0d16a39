import math
from dataclasses import replace

import numpy as np
import pytest

from a2g_sim.clustering import (
    Cluster,
    ClusteringParams,
    Device,
    Role,
    apply_roles,
    assign_members,
    clustering_report,
    devices_from_csv,
    devices_to_csv,
    elect_cluster_heads,
    generate_devices_ppp,
)
from a2g_sim.errors import CapacityError, DomainError
from a2g_sim.geometry import GroundPosition, distance_2d

from oracles import nearest_head_bruteforce


def dev(i, x, y, e):
    return Device(i, GroundPosition(x, y), e)


@pytest.fixture
def small_params():
    return ClusteringParams(region_radius=60.0, density=1.2e-3, energy_threshold=0.6, d2d_range=30.0)


class TestGenerate:
    def test_zero_density(self):
        assert generate_devices_ppp(ClusteringParams(density=0.0)) == []

    def test_deterministic(self):
        p = ClusteringParams(density=2e-4, seed=123)
        a, b = generate_devices_ppp(p), generate_devices_ppp(p)
        assert a == b
        assert devices_to_csv(a) == devices_to_csv(b)

    def test_seed_changes_population(self):
        a = generate_devices_ppp(ClusteringParams(density=2e-4, seed=1))
        b = generate_devices_ppp(ClusteringParams(density=2e-4, seed=2))
        assert a != b

    def test_properties(self):
        p = ClusteringParams(region_radius=300.0, density=5e-4, seed=9)
        devs = generate_devices_ppp(p)
        assert [d.id for d in devs] == list(range(len(devs)))
        assert all(math.hypot(d.position.x, d.position.y) <= 300.0 for d in devs)
        assert all(0.0 <= d.residual_energy <= 1.0 for d in devs)
        assert all(d.role is Role.UNCOVERED for d in devs)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            generate_devices_ppp(ClusteringParams(density=1e-3, max_devices=10))

    def test_poisson_mean(self):
        mean = 1e-3 * math.pi * 500**2
        assert mean == pytest.approx(785.40, abs=0.01)
        counts = [
            len(generate_devices_ppp(ClusteringParams(region_radius=500.0, density=1e-3, seed=s)))
            for s in range(1000)
        ]
        assert abs(np.mean(counts) - mean) <= 3 * math.sqrt(mean / 1000)
        # Var = lambda * area for a Poisson count
        assert np.var(counts, ddof=1) == pytest.approx(mean, rel=0.15)

    def test_uniform_on_disc(self):
        devs = generate_devices_ppp(ClusteringParams(region_radius=100.0, density=0.05, seed=3))
        r2 = np.array([d.position.x**2 + d.position.y**2 for d in devs]) / 100.0**2
        # r^2/R^2 is uniform on [0, 1] for an area-uniform disc
        assert np.mean(r2 < 0.25) == pytest.approx(0.25, abs=0.03)

    @pytest.mark.parametrize(
        "kwargs",
        [{"region_radius": 0.0}, {"density": -1.0}, {"d2d_range": 0.0}, {"seed": -1}, {"seed": 2**64}],
    )
    def test_params_rejected(self, kwargs):
        with pytest.raises(DomainError):
            ClusteringParams(**kwargs)


class TestElect:
    def test_threshold(self):
        devs = [dev(0, 0, 0, 0.9), dev(1, 0, 0, 0.3), dev(2, 0, 0, 0.8)]
        assert elect_cluster_heads(devs, 0.5) == [0, 2]
        assert elect_cluster_heads(devs, 0.0) == [0, 1, 2]
        assert elect_cluster_heads(devs, 1.0) == []

    def test_inclusive_threshold(self):
        assert elect_cluster_heads([dev(0, 0, 0, 1.0)], 1.0) == [0]


class TestAssign:
    def test_unique_nearest(self):
        devs = [dev(0, 0, 0, 0.1), dev(1, 10, 0, 0.9), dev(2, 50, 0, 0.9)]
        clusters, unc = assign_members(devs, [1, 2], 30.0)
        assert clusters == [Cluster(1, (0,)), Cluster(2, ())]
        assert unc == []

    def test_out_of_range(self):
        devs = [dev(0, 100, 100, 0.1), dev(1, 220, 100, 0.9)]
        clusters, unc = assign_members(devs, [1], 30.0)
        assert clusters == [Cluster(1, ())]
        assert unc == [0]

    def test_tie_breaks_to_lowest_id(self):
        devs = [
            dev(0, 0, 0, 0.1),
            dev(1, 500, 500, 0.1),
            dev(2, -20, 0, 0.9),
            dev(3, 900, 900, 0.1),
            dev(4, 20, 0, 0.9),
        ]
        clusters, _ = assign_members(devs, [4, 2], 30.0)
        assert Cluster(2, (0,)) in clusters
        assert Cluster(4, ()) in clusters

    def test_no_heads(self):
        devs = [dev(0, 0, 0, 0.1), dev(1, 5, 5, 0.2)]
        assert assign_members(devs, [], 30.0) == ([], [0, 1])

    def test_bad_head(self):
        with pytest.raises(DomainError):
            assign_members([dev(0, 0, 0, 0.9)], [7], 30.0)

    def test_matches_bruteforce(self, small_params):
        checked = 0
        for seed in range(100):
            p = replace(small_params, seed=seed)
            devs = generate_devices_ppp(p)[:20]
            heads = elect_cluster_heads(devs, p.energy_threshold)
            clusters, unc = assign_members(devs, heads, p.d2d_range)
            got = {m: c.head_id for c in clusters for m in c.member_ids}
            got.update({u: None for u in unc})
            pos = [(d.position.x, d.position.y) for d in devs]
            assert got == nearest_head_bruteforce(pos, set(heads), p.d2d_range)
            checked += len(devs)
        assert checked > 500


class TestPartition:
    def test_partition_and_range(self):
        for seed in range(30):
            p = ClusteringParams(region_radius=200.0, density=2e-3, d2d_range=40.0, seed=seed)
            devs = generate_devices_ppp(p)
            heads = elect_cluster_heads(devs, p.energy_threshold)
            clusters, unc = assign_members(devs, heads, p.d2d_range)
            members = [m for c in clusters for m in c.member_ids]
            all_ids = [c.head_id for c in clusters] + members + list(unc)
            assert sorted(all_ids) == [d.id for d in devs]
            assert len(set(all_ids)) == len(all_ids)
            by_id = {d.id: d for d in devs}
            for c in clusters:
                assert by_id[c.head_id].residual_energy >= p.energy_threshold
                for m in c.member_ids:
                    assert by_id[m].residual_energy < p.energy_threshold
                    assert distance_2d(by_id[m].position, by_id[c.head_id].position) <= p.d2d_range

    def test_apply_roles(self):
        devs = [dev(0, 0, 0, 0.9), dev(1, 5, 0, 0.1), dev(2, 500, 0, 0.1)]
        clusters, unc = assign_members(devs, [0], 30.0)
        roled = apply_roles(devs, clusters, unc)
        assert [d.role for d in roled] == [Role.HEAD, Role.MEMBER, Role.UNCOVERED]
        assert [d.head_id for d in roled] == [None, 0, None]
        assert devs[1].role is Role.UNCOVERED  # originals untouched


class TestReport:
    def test_coverage_fraction(self):
        devs = [dev(i, 0, 0, 0.1) for i in range(10)]
        clusters = [Cluster(0, (1, 2)), Cluster(3, (4, 5, 6, 7))]
        rep = clustering_report(clusters, [8, 9], devs)
        assert (rep.heads, rep.members, rep.uncovered, rep.total) == (2, 6, 2, 10)
        assert rep.coverage_fraction == pytest.approx(0.8)
        assert rep.mean_cluster_size == pytest.approx(3.0)

    def test_empty(self):
        rep = clustering_report([], [], [])
        assert (rep.heads, rep.members, rep.uncovered, rep.total) == (0, 0, 0, 0)
        assert rep.coverage_fraction == 1.0

    def test_single_head(self):
        rep = clustering_report([Cluster(0)], [], [dev(0, 0, 0, 1.0)])
        assert rep.mean_cluster_size == 0.0
        assert rep.coverage_fraction == 1.0
        assert rep.max_member_distance_m == 0.0

    def test_max_member_distance(self):
        devs = [dev(0, 0, 0, 0.9), dev(1, 3, 4, 0.1), dev(2, 0, 10, 0.1)]
        rep = clustering_report([Cluster(0, (1, 2))], [], devs)
        assert rep.max_member_distance_m == pytest.approx(10.0)


class TestCsv:
    def test_format(self):
        devs = apply_roles(
            [dev(0, 1.0 / 3.0, -2.5, 0.9), dev(1, 1234567.0, 0.0, 0.25), dev(2, 9, 9, 0.0)],
            [Cluster(0, (1,))],
            [2],
        )
        text = devices_to_csv(devs)
        assert text == (
            "id,x_m,y_m,energy,role,head_id\n"
            "0,0.333333,-2.5,0.9,head,\n"
            "1,1.23457e+06,0,0.25,member,0\n"
            "2,9,9,0,uncovered,\n"
        )
        assert "\r" not in text

    def test_round_trip(self):
        devs = apply_roles([dev(0, 1.5, 2.5, 0.75), dev(1, 3, 4, 0.125)], [Cluster(0, (1,))], [])
        assert devices_from_csv(devices_to_csv(devs)) == devs
