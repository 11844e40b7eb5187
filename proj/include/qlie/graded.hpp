#pragma once

#include "qlie/axioms.hpp"
#include "qlie/pbw.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qlie {

/// Dense matrix of exact scalars, row major.
struct QMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<QScalar> data;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {}
    QScalar& at(size_t r, size_t c) { return data[r * cols + c]; }
    const QScalar& at(size_t r, size_t c) const { return data[r * cols + c]; }
};

/// Exact rank over the fraction field via fraction-free elimination; the only
/// divisions are by previously produced pivots and stay exact.
size_t rank_over_fraction_field(QMatrix m);

class PreconditionUnverified : public std::runtime_error {
public:
    explicit PreconditionUnverified(const std::string& msg) : std::runtime_error(msg) {}
};

/// Total degree of a word under the structure's gradation; the empty word has
/// degree 0.
int eta_degree(const TLieStructure& s, const Word& w);

struct FiltrationLevel {
    int m = -1;
    std::vector<Word> basis;  // nondecreasing words of degree <= m, term order
};

/// Nondecreasing words of gradation degree <= m; empty for m = -1.
FiltrationLevel filtration_basis(const TLieStructure& s, int m);

struct OmegaReport {
    int m = 0;
    long long sorted_count = 0;    // nondecreasing words of degree exactly m
    long long dim_filtration = 0;  // computed dimension at level m
    long long dim_graded = 0;      // level m minus level m-1
    bool injective = false;
    bool surjective = false;
};

/// Certifies, by exact rank computations, that the degree-m component of the
/// graded algebra is the span of the degree-m nondecreasing words and that
/// their images are independent. Requires a passing confluence certificate
/// for the same structure.
OmegaReport omega_check(const TLieStructure& s, int m, const ConfluenceCertificate& cert);

/// Coordinate matrix of the degree-m nondecreasing words inside the level-m
/// filtration basis; row labels are returned alongside.
QMatrix omega_matrix(const TLieStructure& s, int m, std::vector<Word>* row_labels = nullptr,
                     std::vector<Word>* col_labels = nullptr);

struct MorphismWitness {
    Word u, v;
    std::string lhs;  // graded product of the images
    std::string rhs;  // image of the symmetric-algebra product
};

struct MorphismReport {
    int max_sum = 0;
    long long pairs = 0;
    long long failures = 0;
    bool pass = false;
    std::optional<MorphismWitness> witness;
};

/// Compares the graded product of two image classes with the image of the
/// symmetric-algebra product, over all pairs of nondecreasing words with
/// degree sum <= max_sum.
MorphismReport omega_morphism_check(const TLieStructure& s, int max_sum,
                                    const ConfluenceCertificate& cert);

struct ZeroDivisorReport {
    int max_deg = 0;
    int trials = 0;
    uint64_t seed = 0;
    long long found = 0;
    std::optional<Witness> witness;
};

/// Multiplies seeded random nonzero elements with words of length <= deg and
/// reduces to normal form; reports any product that collapses to zero.
ZeroDivisorReport zero_divisor_probe(const TLieStructure& s, int deg, int trials, uint64_t seed);

}  // namespace qlie
