// Bounded chain complexes of finitely generated free abelian groups and
// their integral homology, computed from Smith normal forms of the
// boundary maps.

#pragma once

#include "fields.hpp"
#include "linalg.hpp"
#include "smith.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lstc {

/// dims[k] is the rank in degree k for 0 <= k <= top; boundary[k] maps
/// degree k to degree k-1 for 1 <= k <= top. boundary[0] stays empty.
struct ChainComplex {
    std::vector<int> dims;
    std::vector<IntMatrix> boundary;

    int top() const { return static_cast<int>(dims.size()) - 1; }

    void validate() const
    {
        if (dims.empty())
            throw std::domain_error("chain complex: at least degree zero is required");
        if (boundary.size() != dims.size())
            throw std::domain_error("chain complex: need one boundary slot per degree");
        for (int k = 0; k <= top(); ++k)
            if (dims[k] < 0)
                throw std::domain_error("chain complex: negative rank in degree " +
                                        std::to_string(k));
        for (int k = 1; k <= top(); ++k) {
            if (boundary[k].rows() != dims[k - 1] || boundary[k].cols() != dims[k])
                throw std::domain_error("chain complex: boundary " + std::to_string(k) +
                                        " has the wrong shape");
        }
        for (int k = 1; k + 1 <= top(); ++k) {
            if (!(boundary[k] * boundary[k + 1]).is_zero())
                throw std::domain_error(
                    "chain complex: composite of boundaries " + std::to_string(k) + " and " +
                    std::to_string(k + 1) + " is nonzero");
        }
    }
};

struct HomologyGroup {
    int degree = 0;
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, in divisibility order

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Readable form such as "Z^2 + Z/2", or "0" for the trivial group.
inline std::string homology_group_name(const HomologyGroup& g)
{
    std::string out;
    const auto append = [&out](const std::string& piece) {
        if (!out.empty())
            out += " + ";
        out += piece;
    };
    if (g.free_rank == 1)
        append("Z");
    else if (g.free_rank > 1)
        append("Z^" + std::to_string(g.free_rank));
    for (const Int& d : g.torsion)
        append("Z/" + d.str());
    return out.empty() ? "0" : out;
}

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // indexed by degree 0..top
    std::vector<SmithResult> smith;     // smith[k] certifies boundary[k], k >= 1
};

/// Rows of an integer matrix mapped into the field.
template <typename F>
FieldMat<F> to_field_rows(const F& field, const IntMatrix& m)
{
    FieldMat<F> out(m.rows(), FieldVec<F>(m.cols(), field.zero()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[i][j] = field.from_int(m.at(i, j));
    return out;
}

/// Dimensions of homology with F_p coefficients, one entry per degree.
inline std::vector<int> homology_dimensions_mod_p(const ChainComplex& complex, long long p)
{
    complex.validate();
    const PrimeField field(p);
    const int top = complex.top();
    std::vector<int> ranks(top + 2, 0);
    for (int k = 1; k <= top; ++k)
        ranks[k] = matrix_rank(field, to_field_rows(field, complex.boundary[k]));
    std::vector<int> dims;
    for (int k = 0; k <= top; ++k)
        dims.push_back(complex.dims[k] - ranks[k] - ranks[k + 1]);
    return dims;
}

/// Integral homology in every degree. H_k is free of rank
/// dims[k] - rank d_k - rank d_{k+1} plus one torsion summand per
/// invariant factor of d_{k+1} that exceeds one. With transforms on, every
/// Smith normal form is certified (U, V unimodular and U A V = D); pass
/// false to skip that on large complexes.
inline HomologyResult homology(const ChainComplex& complex, bool with_transforms = true)
{
    complex.validate();
    const int top = complex.top();
    HomologyResult out;
    out.smith.resize(top + 1);
    std::vector<int> ranks(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        out.smith[k] = smith_normal_form(complex.boundary[k], with_transforms);
        if (with_transforms && !certify_smith(complex.boundary[k], out.smith[k]))
            throw std::logic_error("homology: Smith normal form failed certification in degree " +
                                   std::to_string(k));
        ranks[k] = out.smith[k].rank();
    }
    for (int k = 0; k <= top; ++k) {
        HomologyGroup g;
        g.degree = k;
        g.free_rank = complex.dims[k] - ranks[k] - ranks[k + 1];
        if (g.free_rank < 0)
            throw std::logic_error("homology: negative free rank in degree " + std::to_string(k));
        if (k + 1 <= top) {
            for (const Int& d : out.smith[k + 1].invariant_factors)
                if (d > 1)
                    g.torsion.push_back(d);
        }
        out.groups.push_back(std::move(g));
    }
    return out;
}

}  // namespace lstc
