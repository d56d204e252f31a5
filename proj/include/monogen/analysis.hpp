#pragma once

// Families of minimal generating complexes for Mon_n, scripted refutations,
// bounds on the shortest generating intervals, minimality and enumeration.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monogen/core.hpp"
#include "monogen/genfunc.hpp"
#include "monogen/language.hpp"
#include "monogen/prover.hpp"

namespace monogen {

struct FamilyId {
    enum class Kind { K2, K5, K6, K7, K8 };
    Kind kind = Kind::K2;
    int n = 0;
    /// K2: the two missing vertices.
    int a = 0, b = 0;
    /// K5: 1 < i < j < n-1.
    int i = 0, j = 0;
    /// K8: a_{t+1} - a_t >= 2 and a_3 - a_0 <= n - 2.
    std::array<int, 4> ax{};
    /// K6, K7: vertex insertions applied in order to the base complex.
    std::vector<int> insertions;
    /// K5, K7: symmetry applied to the defining complex (K7: before insertions).
    int shift = 0;
    bool reflect = false;

    bool operator==(const FamilyId&) const = default;
};

std::string to_string(const FamilyId& id);
/// Throws Error on parameters outside their ranges.
void validate(const FamilyId& id);
/// Inverse of to_string; also accepts omitted shift/reflect/ins fields.
FamilyId parse_family_id(std::string_view text);

FamilyId k2_id(int n, int a, int b);
FamilyId k5_id(int n, int i, int j, int shift = 0, bool reflect = false);
FamilyId k6_id(std::vector<int> insertions = {});
FamilyId k7_id(int shift = 0, bool reflect = false, std::vector<int> insertions = {});
FamilyId k8_id(int n, std::array<int, 4> a);

Complex family_complex(const FamilyId& id);
/// K^n_{i,j} rebuilt from K_5 by a circular permutation and vertex insertions.
Complex k5_family_by_insertions(int n, int i, int j);
/// The K_8 family member for a, rebuilt from K_8 by insertions and a circular permutation.
Complex k8_family_by_insertions(int n, std::array<int, 4> a);

/// Generator of Mon_n within family_complex(id), assembled from the builtins by
/// transport and lift_insert. Absent for the K6 family.
std::optional<GenFunction> family_generator(const FamilyId& id);

struct Classification {
    FamilyId id;
    /// g with g . K = family_complex(id).
    Symmetry symmetry;
};

/// Bounded search for K6/K7 insertion schedules.
constexpr int kClassifyMaxInsertions = 3;

/// Family members over I_n as searched by classify (with_symmetries adds every
/// shift and reflection of the K5, K7 and K8 members).
std::vector<FamilyId> family_members(int n, bool with_symmetries = false);

std::optional<Classification> classify(const Complex& k);

/// Refutes the complex of all intervals of size floor((3n+1)/4) - 1 for Mon_n.
/// Replays the lower-bound derivation; n <= 6 falls back to saturation where
/// the derivation does not apply.
Trace refute_short_intervals(int n);
Complex short_intervals_complex(int n);

/// Maximal complex over I_n containing none of [0,j], [j+1,i], [i+1,1], [i,0], [1,n-1].
Complex missing_five_complex(int n, int i, int j);
/// Conflict trace for missing_five_complex(n, i, j) and Mon_n; 1 < i < j < n-1.
Trace refute_missing_five(int n, int i, int j);

struct MuResult {
    int n = 0;
    int lower = 0;
    int upper = 0;
    /// Known exact value, absent when it lies strictly between the bounds.
    std::optional<int> exact;
    /// Generating complex whose intervals have size <= witness_size.
    Complex witness;
    int witness_size = 0;
    std::optional<FamilyId> witness_family;
    std::optional<Trace> certificate;
};

MuResult mu_bounds(int n, bool certify = false);

struct GenerationWitness {
    FamilyId family;
    Complex member;
    GenFunction f;
};

/// A family member inside K whose generator verifiably generates Mon_n within it.
std::optional<GenerationWitness> find_generator(const Complex& k);

enum class Status { Gen, NoGen, Unknown };
std::string_view status_name(Status s);

struct Decision {
    Status status = Status::Unknown;
    std::optional<GenerationWitness> witness;
    std::optional<Trace> refutation;
    bool budget_hit = false;
};

/// One-sided generation decision for Mon_n: family witness or prover conflict.
Decision decide(const Complex& k, const Budget& budget = {});

/// Remove one maximal simplex, add back its facets.
std::vector<Complex> immediate_subcomplexes(const Complex& k);

struct MinimalityResult {
    enum class Kind { Minimal, NotMinimal, Unknown };
    Kind kind = Kind::Unknown;
    /// Minimal: one conflict trace per immediate subcomplex.
    std::vector<Trace> certificates;
    /// NotMinimal: a generating proper subcomplex.
    std::optional<Complex> witness;
    std::string reason;
};

/// L must be Mon_n.
MinimalityResult minimality_check(const Complex& k, const Language& l, const Budget& budget = {});

/// Every interval of K containing i mod n contains i-1 mod n, or the mirrored condition.
bool insertion_preserves_minimality(const Complex& k, int i);

constexpr int kDefaultEnumerationBound = 7;

/// Lexicographically least serialization over the vertex orbit.
Complex canonical_representative(const Complex& k);

/// Antichains of proper intervals with sizes <= max_len, one per orbit.
void enumerate_interval_complexes(int n, int max_len, const std::function<void(const Complex&)>& visit,
                                  int bound = kDefaultEnumerationBound);
std::vector<Complex> enumerate_interval_complexes(int n, int max_len, int bound = kDefaultEnumerationBound);

struct EnumerationEntry {
    Complex complex;
    Status status = Status::Unknown;
    Status minimal = Status::Unknown;  // Gen = YES, NoGen = NO
    std::optional<FamilyId> family;
};

std::string to_string(const EnumerationEntry& e);

/// Covering interval complexes up to symmetry with their decisions.
void enumerate_report(int n, const std::function<void(const EnumerationEntry&)>& visit, const Budget& budget = {},
                      int bound = kDefaultEnumerationBound);
/// Entries whose minimality is YES or UNKNOWN.
std::vector<EnumerationEntry> enumerate_minimal(int n, const Budget& budget = {}, int bound = kDefaultEnumerationBound);

}  // namespace monogen
