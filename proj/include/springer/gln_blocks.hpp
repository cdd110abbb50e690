#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "springer/hecke.hpp"

namespace springer::blocks {

// Inertial type for GL_n: entries (label, d, r, n_eta) with
// sum n_eta * r * d = n.  d is the dimension of the inertial representation,
// r the unramified degree of its field of definition, n_eta the multiplicity.
struct InertialEntry {
    std::string label;
    int d = 1;
    int r = 1;
    int n_eta = 1;
};

struct InertialTypeSpec {
    int n = 0;
    std::vector<InertialEntry> entries;
};

inline void validate_type(const InertialTypeSpec& spec) {
    long total = 0;
    std::set<std::string> labels;
    for (const auto& e : spec.entries) {
        if (e.d < 1 || e.r < 1 || e.n_eta < 1)
            throw DimensionMismatch("entry parameters must be positive");
        if (!labels.insert(e.label).second) throw DuplicateLabel("duplicate label " + e.label);
        total += static_cast<long>(e.n_eta) * e.r * e.d;
    }
    if (total != spec.n)
        throw DimensionMismatch("entries sum to " + std::to_string(total) + ", expected " +
                                std::to_string(spec.n));
}

// The block data attached to a type: one affine Hecke tensor factor
// H_{q^r}(n_eta) per entry, the parameter-moduli factor of matching rank
// over the degree-(r d) unramified tag, and the Levi block sizes.
struct HeckeFactor {
    int parameter_exponent = 1;  // q^r
    int rank = 1;                // GL_rank
    bool operator==(const HeckeFactor& o) const {
        return parameter_exponent == o.parameter_exponent && rank == o.rank;
    }
};

struct ModuliFactor {
    int field_degree = 1;  // degree of E_eta over the base = r * d
    int rank = 1;          // n_eta
    bool operator==(const ModuliFactor& o) const {
        return field_degree == o.field_degree && rank == o.rank;
    }
};

struct BlockDescriptor {
    std::vector<int> levi_blocks;
    std::vector<HeckeFactor> hecke_factors;
    std::vector<ModuliFactor> moduli_factors;
    std::string springer_sheaf_note;
};

inline BlockDescriptor block_decompose(const InertialTypeSpec& spec) {
    validate_type(spec);
    // Entries in lexicographic label order: descriptors are compared up to
    // this fixed ordering.
    std::vector<InertialEntry> entries = spec.entries;
    std::sort(entries.begin(), entries.end(),
              [](const InertialEntry& a, const InertialEntry& b) { return a.label < b.label; });
    BlockDescriptor out;
    std::string note = "pushforward of the Levi-parameter structure sheaf along the standard "
                       "parabolic with blocks [";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        out.hecke_factors.push_back({e.r, e.n_eta});
        out.moduli_factors.push_back({e.r * e.d, e.n_eta});
        for (int k = 0; k < e.n_eta; ++k) out.levi_blocks.push_back(e.r * e.d);
        note += std::to_string(e.n_eta) + "x" + std::to_string(e.r * e.d);
        if (i + 1 < entries.size()) note += ", ";
    }
    note += "]; endomorphisms factor as";
    for (const auto& f : out.hecke_factors)
        note += " H_{q^" + std::to_string(f.parameter_exponent) + "}(" +
                std::to_string(f.rank) + ")";
    out.springer_sheaf_note = note;
    return out;
}

// All inertial types on n from a catalog of (d, r) shapes with unlimited
// labels; entries sharing a shape are a multiset of multiplicities, so each
// shape contributes a partition of its total share.
struct CatalogShape {
    int d = 1;
    int r = 1;
};

inline std::vector<InertialTypeSpec> enumerate_types(int n,
                                                     const std::vector<CatalogShape>& catalog) {
    std::vector<InertialTypeSpec> out;
    std::vector<std::vector<int>> mults_per_shape(catalog.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (idx == catalog.size()) {
            if (left != 0) return;
            InertialTypeSpec spec;
            spec.n = n;
            int label = 0;
            for (std::size_t s = 0; s < catalog.size(); ++s)
                for (int m : mults_per_shape[s])
                    spec.entries.push_back({"eta" + std::to_string(++label), catalog[s].d,
                                            catalog[s].r, m});
            out.push_back(std::move(spec));
            return;
        }
        const int w = catalog[idx].d * catalog[idx].r;
        // partitions (weakly decreasing multiplicity lists) of any k <= left/w
        std::function<void(int, int)> pick = [&](int remaining, int maxm) {
            rec(idx + 1, remaining);  // stop adding entries of this shape
            for (int m = std::min(maxm, remaining / w); m >= 1; --m) {
                mults_per_shape[idx].push_back(m);
                pick(remaining - m * w, m);
                mults_per_shape[idx].pop_back();
            }
        };
        pick(left, n);
    };
    rec(0, n);
    for (const auto& spec : out) validate_type(spec);
    return out;
}

// Independent count: Euler-style partition DP over the part set
// {(shape, multiplicity m) : weight m * d * r}.
inline long enumerate_types_count_oracle(int n, const std::vector<CatalogShape>& catalog) {
    std::vector<long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (const auto& shape : catalog) {
        int w = shape.d * shape.r;
        for (int m = 1; m * w <= n; ++m) {
            int pw = m * w;
            for (int j = pw; j <= n; ++j) dp[j] += dp[j - pw];
        }
    }
    return dp[n];
}

// ---------------------------------------------------------------------------
// Parabolic embedding of Hecke algebras along a composition of n.
// ---------------------------------------------------------------------------

class LeviEmbedding {
public:
    LeviEmbedding(std::vector<int> composition, int n)
        : composition_(std::move(composition)), n_(n) {
        int total = std::accumulate(composition_.begin(), composition_.end(), 0);
        if (total != n_) throw BadComposition("composition does not sum to n");
        for (int m : composition_)
            if (m < 1) throw BadComposition("composition parts must be positive");
        offsets_.push_back(0);
        for (int m : composition_) offsets_.push_back(offsets_.back() + m);
        target_ = RootDatum::preset("GL" + std::to_string(n_));
        for (int m : composition_) factors_.push_back(RootDatum::preset("GL" + std::to_string(m)));
    }

    const std::vector<int>& composition() const { return composition_; }
    const RootDatum* target() const { return target_; }
    const RootDatum* factor(int i) const { return factors_[i]; }
    int factor_count() const { return static_cast<int>(factors_.size()); }

    // Cocharacter of the factor placed into the ambient lattice.
    IntVector embed_cochar(int f, const IntVector& lambda) const {
        IntVector out = IntVector::Zero(n_);
        for (int j = 0; j < composition_[f]; ++j) out[offsets_[f] + j] = lambda[j];
        return out;
    }

    // theta_lambda -> theta_lambda along the lattice inclusion.
    HeckeElement map_theta(int f, const IntVector& lambda) const {
        return theta(target_, embed_cochar(f, lambda)).expansion;
    }

    // Finite simple s_j of factor f -> the corresponding simple of GL_n.
    HeckeElement map_finite_simple(int f, int j) const {
        if (j < 1 || j >= composition_[f]) throw BadComposition("simple index out of range");
        ExtAffineElement s = ExtAffineElement::affine_simple(target_, offsets_[f] + j);
        return HeckeElement::basis(s);
    }

    WeylElement map_finite_weyl(int f, const WeylElement& w) const {
        WeylElement out(target_);
        for (int j : w.word()) out = out * WeylElement::simple(target_, offsets_[f] + j);
        return out;
    }

    // Image of an arbitrary element of the factor algebra, through its
    // Bernstein decomposition theta_lambda T_w -> theta_lambda T_w.
    HeckeElement map_factor_element(int f, const HeckeElement& h) const {
        if (h.datum() != factors_[f]) throw RootDatumMismatch("element not over the factor datum");
        HeckeElement out(target_);
        for (const auto& term : bernstein_decompose(h)) {
            HeckeElement img = theta(target_, embed_cochar(f, term.lambda)).expansion *
                               HeckeElement::basis(ExtAffineElement(
                                   IntVector::Zero(n_), map_finite_weyl(f, term.w)));
            out = out + term.coeff * img;
        }
        return out;
    }

    // Relations of the Bernstein presentation hold in the target: the
    // quadratic relation and braid relations are shared literally, the
    // lattice maps to the lattice, and the mixed relation only involves
    // the factor's own roots, which embed to the matching roots of GL_n.
    // This check recomputes them on the images.
    void verify() const {
        const MultiLaurent q = HeckeElement::q();
        const MultiLaurent one = MultiLaurent::one();
        HeckeElement unit = HeckeElement::unit(target_);
        // quadratic and braid relations for image simples
        for (int f = 0; f < factor_count(); ++f) {
            for (int j = 1; j < composition_[f]; ++j) {
                HeckeElement Ts = map_finite_simple(f, j);
                if (Ts * Ts != (q - one) * Ts + q * unit)
                    throw BadComposition("image quadratic relation fails");
                if (j + 1 < composition_[f]) {
                    HeckeElement Tu = map_finite_simple(f, j + 1);
                    if (Ts * Tu * Ts != Tu * Ts * Tu)
                        throw BadComposition("image braid relation fails");
                }
            }
        }
        // cross-factor commutation
        for (int f = 0; f < factor_count(); ++f)
            for (int g = f + 1; g < factor_count(); ++g)
                for (int j = 1; j < composition_[f]; ++j)
                    for (int k = 1; k < composition_[g]; ++k) {
                        HeckeElement a = map_finite_simple(f, j);
                        HeckeElement b = map_finite_simple(g, k);
                        if (a * b != b * a)
                            throw BadComposition("cross-factor images fail to commute");
                    }
        // theta images form a lattice and commute across factors
        for (int f = 0; f < factor_count(); ++f) {
            IntVector e1 = IntVector::Zero(composition_[f]);
            e1[0] = 1;
            IntVector last = IntVector::Zero(composition_[f]);
            last[composition_[f] - 1] = -1;
            HeckeElement t1 = map_theta(f, e1);
            HeckeElement t2 = map_theta(f, last);
            if (t1 * t2 != map_theta(f, IntVector(e1 + last)) || t1 * t2 != t2 * t1)
                throw BadComposition("image theta lattice fails");
        }
        // center elements of each factor commute with every image generator
        for (int f = 0; f < factor_count(); ++f) {
            IntVector omega1 = IntVector::Zero(composition_[f]);
            omega1[0] = 1;
            HeckeElement z = map_factor_element(f, center_element(factors_[f], omega1));
            for (int g = 0; g < factor_count(); ++g) {
                for (int j = 1; j < composition_[g]; ++j)
                    if (!commutator(z, map_finite_simple(g, j)).is_zero())
                        throw BadComposition("factor center image fails to centralize");
                IntVector eg = IntVector::Zero(composition_[g]);
                eg[0] = 1;
                if (!commutator(z, map_theta(g, eg)).is_zero())
                    throw BadComposition("factor center image fails on thetas");
            }
        }
    }

private:
    std::vector<int> composition_;
    int n_;
    std::vector<int> offsets_;
    const RootDatum* target_;
    std::vector<const RootDatum*> factors_;
};

inline LeviEmbedding hecke_embedding(const std::vector<int>& composition, int n) {
    return LeviEmbedding(composition, n);
}

}  // namespace springer::blocks
