#pragma once

// The concrete groups, representations and improvement data of the worked examples.

#include "semidecay/lattice.hpp"
#include "semidecay/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semidecay {

enum class FieldKind { real, complex, quaternion, nonarchimedean };

struct FieldDescriptor {
  FieldKind kind = FieldKind::real;
  int delta_factor = 1;  // 2 for complex, 1 otherwise
};

FieldDescriptor make_field(FieldKind kind);

enum class Family { SL, Sp2n, SO0_1n, SU_1n, Sp_1n, SU_nm, Sp_nm };

struct GroupSpec {
  Family family = Family::SL;
  int n = 2;
  std::optional<int> m;
  FieldDescriptor field;
  int rank = 1;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.family == b.family && a.n == b.n && a.m == b.m && a.field.kind == b.field.kind;
  }
};

/// Validates parameters and fills in the rank. Throws UnsupportedGroup.
GroupSpec make_group(Family family, int n, std::optional<int> m = std::nullopt,
                     FieldKind field = FieldKind::real);

std::string group_name(const GroupSpec& group);
std::string_view family_id(Family family);
Family parse_family(std::string_view id);  // "sl", "sp2n", "so1n", ...; also "sl2", "sl3"
std::string_view field_id(FieldKind kind);  // "R", "C", "H", "p"
FieldKind parse_field(std::string_view id);

enum class RepKind { standard, adjoint, custom };

std::string_view rep_id(RepKind kind);
RepKind parse_rep(std::string_view id);

struct RepSpec {
  RepKind kind = RepKind::standard;
  RepWeights weights;
};

enum class Mechanism { shell_improvement, howe_product, rank1_beta };

std::string_view mechanism_id(Mechanism mechanism);
Mechanism parse_mechanism(std::string_view id);

struct ImprovementRecord {
  GroupSpec group;
  RepKind rep = RepKind::standard;
  Rational gamma;  // negative; for howe_product, gamma = -(per-weight delta)
  Mechanism mechanism = Mechanism::shell_improvement;
  std::string source;
  bool log_correction = false;  // decay holds only up to an epsilon loss
};

struct RootEntry {
  WeightVector root;
  int multiplicity = 1;
};

/// lambda_i = alpha_i + ... + alpha_{n-1} + c alpha_n, in simple-root coordinates.
WeightVector lambda_basis_vector(int n, int i, const Rational& c);

/// The normalization c above for the group's lambda basis (1/2 for C_n type, 1 for BC_n type).
Rational lambda_basis_scale(const GroupSpec& group);

std::vector<RootEntry> lookup_root_data(const GroupSpec& group);
RepWeights lookup_rep_weights(const GroupSpec& group, RepKind kind);
ImprovementRecord lookup_improvement(const GroupSpec& group, RepKind kind);

/// The closed-form delta_B exponents as the paper states them per example,
/// independent of the root tables. Used for the cross-check.
WeightVector stated_modular_weight(const GroupSpec& group);

struct CatalogGroup {
  GroupSpec group;
  std::vector<RootEntry> roots;
  std::string source;
};

struct CatalogRep {
  GroupSpec group;
  RepKind kind = RepKind::standard;
  RepWeights weights;
  std::string source;
};

struct Catalog {
  std::vector<CatalogGroup> groups;
  std::vector<CatalogRep> reps;
  std::vector<ImprovementRecord> improvements;

  const CatalogGroup* find_group(const GroupSpec& group) const;
  const ImprovementRecord* find_improvement(const GroupSpec& group, RepKind kind) const;
};

/// Every family for n in [2, 8] (m in [n, 8]) plus the SL(2)/SL(3) examples over each field.
const Catalog& builtin_catalog();

}  // namespace semidecay
