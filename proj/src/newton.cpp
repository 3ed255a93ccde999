#include "igusa/newton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace igusa {

using linalg::IntMat;
using linalg::IntVec;

std::int64_t Facet::abs_normal() const { return std::accumulate(normal.begin(), normal.end(), std::int64_t{0}); }

namespace {

IntVec as_vec(const Monomial& m) { return IntVec(m.begin(), m.end()); }

std::int64_t weight(const WeightVector& a, const Monomial& w)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * static_cast<std::int64_t>(w[i]);
    return s;
}

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b)
{
    std::vector<std::size_t> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<std::size_t> zero_coords(const WeightVector& a)
{
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0) r.push_back(i);
    return r;
}

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        std::size_t j = k;
        while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
        if (j == 0) return;
        ++idx[j - 1];
        for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

int NewtonPolyhedron::affine_dim(const std::vector<std::size_t>& meet, const std::vector<std::size_t>& rays) const
{
    if (meet.empty()) return -1;
    IntMat rows;
    const IntVec base = as_vec(support_[meet[0]]);
    for (std::size_t k = 1; k < meet.size(); ++k) {
        IntVec d = as_vec(support_[meet[k]]);
        for (std::size_t i = 0; i < n_; ++i) d[i] -= base[i];
        rows.push_back(std::move(d));
    }
    for (auto r : rays) {
        IntVec e(n_, 0);
        e[r] = 1;
        rows.push_back(std::move(e));
    }
    return static_cast<int>(linalg::rank(rows));
}

Face NewtonPolyhedron::close_face(std::vector<std::size_t> meet, std::vector<std::size_t> rays) const
{
    Face face;
    face.dim = affine_dim(meet, rays);
    for (std::size_t j = 0; j < facets_.size(); ++j) {
        if (subset_of(meet, facets_[j].meet) && subset_of(rays, zero_coords(facets_[j].normal))) face.facets.push_back(j);
    }
    face.meet = std::move(meet);
    face.rays = std::move(rays);
    return face;
}

NewtonPolyhedron NewtonPolyhedron::build(const Polynomial& f)
{
    if (f.is_zero()) throw Error("Newton polyhedron of the zero polynomial");
    NewtonPolyhedron poly;
    poly.n_ = f.num_vars();
    poly.support_ = f.support();
    for (const auto& w : poly.support_)
        if (total_degree(w) == 0) throw Error("Newton polyhedron needs f(0) = 0");
    const std::size_t n = poly.n_;
    const auto& supp = poly.support_;

    std::set<WeightVector> normals;
    if (n == 1) {
        normals.insert(WeightVector{1});
    } else {
        // candidate spanning vectors: differences to a base point, and the coordinate rays
        for (std::size_t b = 0; b < supp.size(); ++b) {
            IntMat cand;
            const IntVec base = as_vec(supp[b]);
            for (std::size_t j = 0; j < supp.size(); ++j) {
                if (j == b) continue;
                IntVec d = as_vec(supp[j]);
                for (std::size_t i = 0; i < n; ++i) d[i] -= base[i];
                cand.push_back(std::move(d));
            }
            for (std::size_t i = 0; i < n; ++i) {
                IntVec e(n, 0);
                e[i] = 1;
                cand.push_back(std::move(e));
            }
            for_each_subset(cand.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
                IntMat rows;
                for (auto k : idx) rows.push_back(cand[k]);
                auto a = linalg::cofactor_normal(rows);
                BigInt g = 0;
                bool pos = false, neg = false;
                for (const auto& x : a) {
                    g = gcd(g, x);
                    if (x > 0) pos = true;
                    if (x < 0) neg = true;
                }
                if (g == 0 || (pos && neg)) return;
                WeightVector w(n);
                for (std::size_t i = 0; i < n; ++i) {
                    BigInt q = a[i] / g;
                    if (neg) q = -q;
                    w[i] = q.get_si();
                }
                normals.insert(std::move(w));
            });
        }
    }

    for (const auto& a : normals) {
        Facet fc;
        fc.normal = a;
        fc.m_value = poly.m_of(a);
        for (std::size_t k = 0; k < supp.size(); ++k)
            if (weight(a, supp[k]) == fc.m_value) fc.meet.push_back(k);
        if (poly.affine_dim(fc.meet, zero_coords(a)) != static_cast<int>(n) - 1) continue;
        poly.facets_.push_back(std::move(fc));
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& x, const Facet& y) {
        if (x.abs_normal() != y.abs_normal()) return x.abs_normal() < y.abs_normal();
        return x.normal > y.normal;
    });

    // proper faces: closure of facet meet-sets under intersection
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, Face> found;
    std::deque<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> queue;
    for (const auto& fc : poly.facets_) queue.emplace_back(fc.meet, zero_coords(fc.normal));
    while (!queue.empty()) {
        auto key = std::move(queue.front());
        queue.pop_front();
        if (key.first.empty() || found.count(key)) continue;
        Face face = poly.close_face(key.first, key.second);
        for (std::size_t j = 0; j < poly.facets_.size(); ++j) {
            if (std::binary_search(face.facets.begin(), face.facets.end(), j)) continue;
            auto meet = intersect(key.first, poly.facets_[j].meet);
            if (meet.empty()) continue;
            queue.emplace_back(std::move(meet), intersect(key.second, zero_coords(poly.facets_[j].normal)));
        }
        found.emplace(std::move(key), std::move(face));
    }
    for (auto& [k, face] : found) poly.faces_.push_back(std::move(face));
    std::stable_sort(poly.faces_.begin(), poly.faces_.end(), [](const Face& x, const Face& y) {
        if (x.dim != y.dim) return x.dim > y.dim;
        if (x.meet != y.meet) return x.meet < y.meet;
        return x.rays < y.rays;
    });

    Face whole;
    whole.meet.resize(supp.size());
    std::iota(whole.meet.begin(), whole.meet.end(), 0);
    whole.rays.resize(n);
    std::iota(whole.rays.begin(), whole.rays.end(), 0);
    whole.dim = static_cast<int>(n);
    whole.improper = true;
    poly.faces_.push_back(std::move(whole));
    return poly;
}

std::vector<std::size_t> NewtonPolyhedron::proper_face_indices() const
{
    std::vector<std::size_t> r(faces_.size() - 1);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

std::int64_t NewtonPolyhedron::m_of(const WeightVector& a) const
{
    if (a.size() != n_) throw Error("m_of: arity mismatch");
    for (auto x : a)
        if (x < 0) throw Error("m_of: weight vector must be nonnegative");
    std::int64_t best = weight(a, support_.front());
    for (const auto& w : support_) best = std::min(best, weight(a, w));
    return best;
}

std::optional<std::size_t> NewtonPolyhedron::find_face(const std::vector<std::size_t>& meet,
                                                       const std::vector<std::size_t>& rays) const
{
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].meet == meet && faces_[i].rays == rays) return i;
    return std::nullopt;
}

std::size_t NewtonPolyhedron::first_meet_locus_index(const WeightVector& a) const
{
    const std::int64_t m = m_of(a);
    if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return faces_.size() - 1;
    std::vector<std::size_t> meet;
    for (std::size_t k = 0; k < support_.size(); ++k)
        if (weight(a, support_[k]) == m) meet.push_back(k);
    auto idx = find_face(meet, zero_coords(a));
    if (!idx) throw Error("first_meet_locus: face not in lattice (internal inconsistency)");
    return *idx;
}

const Face& NewtonPolyhedron::first_meet_locus(const WeightVector& a) const { return faces_[first_meet_locus_index(a)]; }

Cone NewtonPolyhedron::cone_of_face(const Face& face, bool closed) const
{
    if (face.improper) throw Error("cone_of_face: the improper face has no cone");
    Cone c;
    for (auto j : face.facets) c.generators.push_back(facets_[j].normal);
    c.strict.assign(c.generators.size(), !closed);
    return c;
}

Polynomial face_polynomial(const Polynomial& f, const NewtonPolyhedron& poly, const Face& face)
{
    if (face.improper) return f;
    Polynomial r(f.variables());
    for (auto k : face.meet) {
        const Monomial& w = poly.support()[k];
        r.add_term(w, f.coefficient(w));
    }
    return r;
}

bool Cone::is_simple() const { return is_simplicial() && linalg::maximal_minor_gcd(generators) == 1; }

bool Cone::contains(const IntVec& v) const
{
    if (!is_simplicial()) throw Error("Cone::contains needs a simplicial cone");
    auto lam = linalg::coordinates(generators, v);
    if (!lam) return false;
    for (std::size_t i = 0; i < lam->size(); ++i) {
        if (strict[i] ? (*lam)[i] <= 0 : (*lam)[i] < 0) return false;
    }
    return true;
}

std::vector<Cone> decompose_simplicial(const Cone& cone)
{
    const auto& gens = cone.generators;
    if (gens.empty()) throw Error("decompose_simplicial: no generators");
    for (const auto& g : gens)
        if (std::all_of(g.begin(), g.end(), [](auto x) { return x == 0; })) throw Error("zero generator");
    const bool all_strict = std::all_of(cone.strict.begin(), cone.strict.end(), [](bool b) { return b; });
    const bool all_closed = std::none_of(cone.strict.begin(), cone.strict.end(), [](bool b) { return b; });
    if (!all_strict && !all_closed) throw Error("decompose_simplicial: mixed openness is not supported");

    auto basis_of = [&](const std::vector<std::size_t>& cell) {
        IntMat b;
        for (auto i : cell) b.push_back(gens[i]);
        return b;
    };

    // placing triangulation in input order
    std::vector<std::vector<std::size_t>> cells{{0}};
    for (std::size_t k = 1; k < gens.size(); ++k) {
        auto lam = linalg::coordinates(basis_of(cells.front()), gens[k]);
        if (!lam) {
            for (auto& c : cells) c.push_back(k);
            continue;
        }
        std::map<std::vector<std::size_t>, int> facet_count;
        for (const auto& c : cells) {
            for (std::size_t h = 0; h < c.size(); ++h) {
                auto fct = c;
                fct.erase(fct.begin() + static_cast<long>(h));
                ++facet_count[fct];
            }
        }
        std::vector<std::vector<std::size_t>> added;
        for (const auto& c : cells) {
            auto coords = *linalg::coordinates(basis_of(c), gens[k]);
            for (std::size_t h = 0; h < c.size(); ++h) {
                if (coords[h] >= 0) continue;
                auto fct = c;
                fct.erase(fct.begin() + static_cast<long>(h));
                if (facet_count[fct] != 1) continue;
                fct.push_back(k);
                added.push_back(std::move(fct));
            }
        }
        for (auto& c : added) cells.push_back(std::move(c));
    }

    // reference point z generic inside the first cell; walls between cells go to the side of z
    const std::size_t n = gens[0].size();
    std::vector<std::vector<Rational>> lam_z;
    for (std::int64_t attempt = 0;; ++attempt) {
        if (attempt > 200) throw Error("decompose_simplicial: no generic reference point found");
        IntVec z(n, 0);
        for (std::size_t i = 0; i < cells.front().size(); ++i) {
            std::int64_t w = 97 + static_cast<std::int64_t>((i + 1) * (i + 1)) * (13 + attempt) + attempt * attempt * 7;
            for (std::size_t j = 0; j < n; ++j) z[j] += w * gens[cells.front()[i]][j];
        }
        lam_z.clear();
        bool generic = true;
        for (const auto& c : cells) {
            auto l = *linalg::coordinates(basis_of(c), z);
            if (std::any_of(l.begin(), l.end(), [](const Rational& x) { return x == 0; })) generic = false;
            lam_z.push_back(std::move(l));
        }
        if (generic) break;
    }

    std::map<std::vector<std::size_t>, int> wall_count;
    for (const auto& c : cells) {
        for (std::size_t h = 0; h < c.size(); ++h) {
            auto fct = c;
            fct.erase(fct.begin() + static_cast<long>(h));
            ++wall_count[fct];
        }
    }
    std::vector<Cone> out;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        Cone c;
        c.generators = basis_of(cells[ci]);
        for (std::size_t h = 0; h < cells[ci].size(); ++h) {
            auto fct = cells[ci];
            fct.erase(fct.begin() + static_cast<long>(h));
            const bool inner = wall_count[fct] > 1;
            c.strict.push_back(!(lam_z[ci][h] > 0 && (all_closed || inner)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace igusa
