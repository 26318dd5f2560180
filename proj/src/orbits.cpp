#include "cubezeta/orbits.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace cubezeta {

DVec::DVec(std::vector<u64> d) : entries(std::move(d)) {
    if (entries.empty()) throw std::domain_error("DVec: q must be >= 1");
    for (u64 e : entries)
        if (e == 0) throw std::domain_error("DVec: entries must be >= 1");
}

u64 DVec::product() const {
    u64 p = 1;
    for (u64 e : entries) p *= e;
    return p;
}

u64 DVec::lcm() const {
    u64 l = 1;
    for (u64 e : entries) l = lcm_u64(l, e);
    return l;
}

u64 DVec::degree_bound() const {
    u64 p = 1;
    for (u64 e : entries) p *= phi_tilde(e);
    return p;
}

u64 orbit_size_bound() {
    if (const char* env = std::getenv("CUBEZETA_MAX_DEGREE")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;  // 10^6 desk-scale default
}

GcdGraph gcd_graph(const DVec& d) {
    GcdGraph g;
    for (std::size_t i = 0; i < d.q(); ++i)
        if (d.entries[i] >= 3) g.vertices.push_back(i);
    // union-find over vertex positions
    std::vector<std::size_t> parent(g.vertices.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
            if (gcd_u64(d.entries[g.vertices[a]], d.entries[g.vertices[b]]) >= 3) {
                g.edges.emplace_back(g.vertices[a], g.vertices[b]);
                parent[find(a)] = find(b);
            }
    std::vector<std::vector<std::size_t>> comps(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) comps[find(i)].push_back(g.vertices[i]);
    for (auto& c : comps)
        if (!c.empty()) g.components.push_back(std::move(c));
    return g;
}

JTuple act(const DVec& d, u64 a, const JTuple& t) {
    JTuple r(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        r[i] = fold_into_j(a * t[i], d.entries[i]);
    return r;
}

OrbitDecomposition orbit_decompose(const DVec& d) {
    if (d.degree_bound() > orbit_size_bound())
        throw ResourceError("orbit_decompose: index set exceeds the size bound");
    std::vector<JSet> jsets;
    for (u64 e : d.entries) jsets.push_back(j_set(e));
    // the action factors through (Z/N'Z)^x with N' = lcm
    UnitGroup units = unit_group(d.lcm());

    OrbitDecomposition out;
    out.dvec = d;
    std::set<JTuple> seen;
    JTuple cur(d.q());
    std::vector<std::size_t> idx(d.q(), 0);
    // lexicographic scan of the index box; the first unseen tuple is the
    // lexicographic minimum of its orbit
    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i < d.q(); ++i) cur[i] = jsets[i].members[idx[i]];
        if (!seen.count(cur)) {
            std::set<JTuple> orbit;
            for (u64 a : units.elements) orbit.insert(act(d, a, cur));
            out.representatives.push_back(cur);
            out.orbits.emplace_back(orbit.begin(), orbit.end());
            seen.insert(orbit.begin(), orbit.end());
        }
        // advance odometer (last coordinate fastest)
        std::size_t pos = d.q();
        while (pos-- > 0) {
            if (++idx[pos] < jsets[pos].members.size()) break;
            idx[pos] = 0;
            if (pos == 0) done = true;
        }
    }
    return out;
}

u64 orb_count_formula(const DVec& d) {
    u64 num = d.degree_bound() << gcd_graph(d).reduced_betti0();
    u64 den = phi_tilde(d.lcm());
    if (num % den != 0)
        throw std::logic_error("orb_count_formula: unexpected non-integer ratio");
    return num / den;
}

SubgroupH subgroup_h(const DVec& d) {
    for (u64 e : d.entries)
        if (e < 3) throw std::domain_error("subgroup_h: all d_i must be >= 3");
    SubgroupH h;
    h.dvec = d;
    u64 nprime = d.lcm();
    for (u64 g : unit_group(nprime).elements) {
        bool ok = true;
        for (u64 di : d.entries) {
            u64 r = g % di;
            if (r != 1 % di && r != (di - 1) % di) { ok = false; break; }
        }
        if (ok) h.elements.push_back(g);
    }
    return h;
}

IotaOrbitReport iota_orbit_analysis(u64 m) {
    if (m < 3) throw std::domain_error("iota_orbit_analysis: m must be >= 3");
    IotaOrbitReport rep;
    rep.m = m;

    auto dec = orbit_decompose(DVec({m, m}));
    for (const auto& orbit : dec.orbits) {
        std::set<JTuple> as_set(orbit.begin(), orbit.end());
        bool invariant = true;
        for (const auto& t : orbit)
            if (!as_set.count(JTuple{t[1], t[0]})) { invariant = false; break; }
        if (invariant) ++rep.invariant_orbit_count;
    }

    if (m % 8 == 0) rep.f1 = 2;
    else if (m % 4 == 0) rep.f1 = 1;
    else rep.f1 = 0;
    rep.f2 = 0;
    bool all_p1mod4 = true;
    for (auto [p, e] : factorize(m))
        if (p % 2 == 1) {
            ++rep.f2;
            if (p % 4 != 1) all_p1mod4 = false;
        }
    rep.f3 = (m % 4 != 0 && rep.f2 >= 1 && all_p1mod4) ? 1 : 0;
    rep.formula_a = u64(1) << (rep.f1 + rep.f2 + rep.f3 - 1);
    rep.formula_applicable = (phi_tilde(m) % 2 == 0);
    return rep;
}

std::vector<JTuple> q2_family_representatives(u64 d1, u64 d2) {
    // (m, 2m)
    if (d2 == 2 * d1 && d1 >= 3) {
        u64 m = d1;
        std::vector<JTuple> reps;
        const JSet src = (m % 2 == 0) ? j_set(m) : j_set(2 * m);
        for (u64 a : src.members) reps.push_back(JTuple{1, a});
        return reps;
    }
    // (m, m)
    if (d1 == d2 && d1 >= 3) {
        std::vector<JTuple> reps;
        for (u64 a : j_set(d1).members) reps.push_back(JTuple{1, a});
        return reps;
    }
    // phi_tilde(d2) = 2, i.e. d2 in {5, 8, 10, 12}
    if (d2 == 5 || d2 == 8 || d2 == 10 || d2 == 12) {
        u64 a = (d2 == 5) ? 2 : (d2 == 12) ? 5 : 3;
        bool split = (d2 == 10) ? (d1 % 5 == 0) : (d1 % d2 == 0);
        if (split) return {JTuple{1, 1}, JTuple{1, a}};
        return {JTuple{1, 1}};
    }
    throw std::domain_error("q2_family_representatives: (d1,d2) outside the known families");
}

}  // namespace cubezeta
