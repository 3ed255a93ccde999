#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "igusa/linalg.hpp"
#include "igusa/mpoly.hpp"

namespace igusa {

using WeightVector = std::vector<std::int64_t>;

/// A facet of the Newton polyhedron: primitive normal a in N^n \ {0} and m(a) = min a·omega.
struct Facet {
    WeightVector normal;
    std::int64_t m_value = 0;
    std::vector<std::size_t> meet;  // indices into NewtonPolyhedron::support()

    /// |a|, the coordinate sum of the normal.
    std::int64_t abs_normal() const;
};

/// A face: conv(meet points) + cone(e_i : i in rays). The improper face is the polyhedron itself.
struct Face {
    std::vector<std::size_t> meet;
    std::vector<std::size_t> rays;
    std::vector<std::size_t> facets;  // all facets containing the face
    int dim = 0;
    bool improper = false;

    friend bool operator==(const Face& a, const Face& b) { return a.meet == b.meet && a.rays == b.rays; }
};

/// Polyhedral cone sum lambda_i g_i with lambda_i > 0 (strict) or >= 0 per generator.
struct Cone {
    linalg::IntMat generators;
    std::vector<bool> strict;

    std::size_t dimension() const { return linalg::rank(generators); }
    bool is_simplicial() const { return dimension() == generators.size(); }
    /// Generators extend to a basis of Z^n.
    bool is_simple() const;
    /// Membership; only defined for simplicial cones.
    bool contains(const linalg::IntVec& v) const;
};

class NewtonPolyhedron {
public:
    /// Requires f != 0 and f(0) = 0.
    static NewtonPolyhedron build(const Polynomial& f);

    std::size_t ambient_dim() const noexcept { return n_; }
    const std::vector<Monomial>& support() const noexcept { return support_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    /// Proper faces first, the improper face last.
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const Face& improper_face() const { return faces_.back(); }
    std::vector<std::size_t> proper_face_indices() const;

    /// min over the support of a·omega; a must be nonnegative.
    std::int64_t m_of(const WeightVector& a) const;

    /// F(a); a = 0 gives the improper face.
    const Face& first_meet_locus(const WeightVector& a) const;
    std::size_t first_meet_locus_index(const WeightVector& a) const;

    /// Strictly positive span of the normals of all facets containing a proper face.
    Cone cone_of_face(const Face& face, bool closed = false) const;

    std::optional<std::size_t> find_face(const std::vector<std::size_t>& meet, const std::vector<std::size_t>& rays) const;

private:
    Face close_face(std::vector<std::size_t> meet, std::vector<std::size_t> rays) const;
    int affine_dim(const std::vector<std::size_t>& meet, const std::vector<std::size_t>& rays) const;

    std::size_t n_ = 0;
    std::vector<Monomial> support_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
};

/// Terms of f whose exponents lie on the face.
Polynomial face_polynomial(const Polynomial& f, const NewtonPolyhedron& poly, const Face& face);

/// Half-open simplicial cells from a placing triangulation in generator order.
/// Input cone must be all-strict (relatively open) or all-closed.
std::vector<Cone> decompose_simplicial(const Cone& cone);

}  // namespace igusa
