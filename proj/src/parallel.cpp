#include "plueckerfan/parallel.hpp"

#include <exception>
#include <mutex>

namespace pf {

namespace {

// Runs body(i) for i in [0, count); the first exception is rethrown after the loop.
template <class F>
void run(std::size_t count, Exec exec, F&& body)
{
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr error;
    std::mutex guard;
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(guard);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<std::pair<Elem, Elem>> incomparable_pairs(const PluckerLattice& lat)
{
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem a = 0; a < lat.size(); ++a)
        for (Elem b = a + 1; b < lat.size(); ++b)
            if (!lat.lattice.comparable(a, b)) out.emplace_back(a, b);
    return out;
}

std::vector<Straightening> straighten_all(const PluckerLattice& lat, Exec exec)
{
    auto pairs = incomparable_pairs(lat);
    std::vector<Straightening> out(pairs.size());
    run(pairs.size(), exec, [&](std::size_t i) { out[i] = straighten_pair(lat, pairs[i].first, pairs[i].second); });
    return out;
}

std::uint64_t item_seed(std::uint64_t seed, std::uint64_t i)
{
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<MembershipVerdict> membership_all(const std::vector<Polynomial>& ps, int n, int trials,
                                              std::uint64_t seed, Exec exec)
{
    std::vector<MembershipVerdict> out(ps.size());
    run(ps.size(), exec, [&](std::size_t i) {
        out[i] = ideal_membership(ps[i], n, OracleMode::Probabilistic, trials, item_seed(seed, i));
    });
    return out;
}

std::vector<char> certify_all(const ConeHRep& h, const PluckerSetting& s, Exec exec)
{
    std::vector<char> out(h.inequalities.size());
    run(out.size(), exec, [&](std::size_t i) { out[i] = certify_witness(h, i, facet_witness(h, i, s)); });
    return out;
}

std::vector<char> contained_all(const std::vector<WeightVector>& points, const std::vector<const ConeHRep*>& hs,
                                Exec exec)
{
    std::vector<char> out(points.size() * hs.size());
    run(points.size(), exec, [&](std::size_t i) {
        for (std::size_t j = 0; j < hs.size(); ++j) out[i * hs.size() + j] = contains(*hs[j], points[i]);
    });
    return out;
}

std::vector<char> initial_forms_all(const std::vector<WeightVector>& points, const PluckerLattice& lat,
                                    const std::vector<Straightening>& rels, Exec exec)
{
    std::vector<char> out(points.size());
    run(points.size(), exec, [&](std::size_t i) {
        bool ok = true;
        for (const auto& st : rels) {
            auto in = initial_form(st.relation, lat, points[i]);
            ok = ok && in.size() == 1 && in.terms().begin()->first == lattice_monomial(lat, st.a, st.b);
            if (!ok) break;
        }
        out[i] = ok;
    });
    return out;
}

}  // namespace pf
