#include "semidecay/catalog.hpp"

#include "semidecay/error.hpp"

#include <algorithm>

namespace semidecay {

namespace {

int field_multiplicity(FieldKind kind) {
  switch (kind) {
    case FieldKind::complex: return 2;
    case FieldKind::quaternion: return 4;
    default: return 1;
  }
}

WeightVector scaled(Rational s, const WeightVector& v) { return s * v; }

// Positive roots lambda_i +- lambda_j (i<j), lambda_i, 2 lambda_i of a C_n / BC_n system.
std::vector<RootEntry> paired_roots(int n, const Rational& c, int mult_pm, int mult_short, int mult_long) {
  std::vector<RootEntry> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const WeightVector li = lambda_basis_vector(n, i, c), lj = lambda_basis_vector(n, j, c);
      roots.push_back({li - lj, mult_pm});
      roots.push_back({li + lj, mult_pm});
    }
  for (int i = 1; i <= n; ++i) {
    const WeightVector li = lambda_basis_vector(n, i, c);
    if (mult_short > 0) roots.push_back({li, mult_short});
    if (mult_long > 0) roots.push_back({scaled(2, li), mult_long});
  }
  return roots;
}

RepWeights paired_weights(int n, const Rational& c, int dim, int zero_dim) {
  std::vector<WeightEntry> entries;
  for (int i = 1; i <= n; ++i) {
    const WeightVector li = lambda_basis_vector(n, i, c);
    entries.push_back({li, dim});
    entries.push_back({-li, dim});
  }
  if (zero_dim > 0) entries.push_back({zero_weight(n), zero_dim});
  return make_rep_weights(std::move(entries));
}

RepWeights rank_one_chain(int end_dim, int zero_dim) {
  const WeightVector a = unit_weight(1, 0);
  std::vector<WeightEntry> entries{{a, end_dim}, {-a, end_dim}};
  if (zero_dim > 0) entries.push_back({zero_weight(1), zero_dim});
  return make_rep_weights(std::move(entries));
}

[[noreturn]] void no_rep(const GroupSpec& g, RepKind kind) {
  throw Error(Errc::unsupported_representation,
              std::string(rep_id(kind)) + " representation of " + group_name(g) + " is not catalogued");
}

[[noreturn]] void no_improvement(const GroupSpec& g, RepKind kind) {
  throw Error(Errc::no_improvement,
              "no improvement recorded for " + group_name(g) + " " + std::string(rep_id(kind)));
}

}  // namespace

FieldDescriptor make_field(FieldKind kind) {
  return FieldDescriptor{kind, kind == FieldKind::complex ? 2 : 1};
}

GroupSpec make_group(Family family, int n, std::optional<int> m, FieldKind field) {
  GroupSpec g;
  g.family = family;
  g.n = n;
  g.field = make_field(field);
  auto reject = [&](const std::string& why) -> GroupSpec {
    throw Error(Errc::unsupported_group, why);
  };
  switch (family) {
    case Family::SL:
      if (n < 2) return reject("SL(n) needs n >= 2");
      g.rank = n - 1;
      break;
    case Family::Sp2n:
      if (n < 1) return reject("Sp(2n) needs n >= 1");
      if (field == FieldKind::quaternion) return reject("Sp(2n) is not defined over H here");
      g.rank = n;
      break;
    case Family::SO0_1n:
    case Family::SU_1n:
    case Family::Sp_1n:
      if (n < 2) return reject("rank-one families need n >= 2");
      if (field != FieldKind::real) return reject("rank-one families are real groups");
      g.rank = 1;
      break;
    case Family::SU_nm:
    case Family::Sp_nm:
      if (!m) return reject("SU(n,m)/Sp(n,m) need m");
      if (n < 2 || *m < n) return reject("SU(n,m)/Sp(n,m) need m >= n >= 2");
      if (field != FieldKind::real) return reject("SU(n,m)/Sp(n,m) are real groups");
      g.m = m;
      g.rank = n;
      break;
  }
  return g;
}

std::string_view field_id(FieldKind kind) {
  switch (kind) {
    case FieldKind::real: return "R";
    case FieldKind::complex: return "C";
    case FieldKind::quaternion: return "H";
    case FieldKind::nonarchimedean: return "p";
  }
  return "?";
}

FieldKind parse_field(std::string_view id) {
  if (id == "R" || id == "real") return FieldKind::real;
  if (id == "C" || id == "complex") return FieldKind::complex;
  if (id == "H" || id == "quaternion") return FieldKind::quaternion;
  if (id == "p" || id == "nonarchimedean") return FieldKind::nonarchimedean;
  throw Error(Errc::invalid_input, "unknown field '" + std::string(id) + "'");
}

std::string_view family_id(Family family) {
  switch (family) {
    case Family::SL: return "sl";
    case Family::Sp2n: return "sp2n";
    case Family::SO0_1n: return "so1n";
    case Family::SU_1n: return "su1n";
    case Family::Sp_1n: return "sp1n";
    case Family::SU_nm: return "sunm";
    case Family::Sp_nm: return "spnm";
  }
  return "?";
}

Family parse_family(std::string_view id) {
  if (id == "sl" || id == "sln" || id == "sl2" || id == "sl3") return Family::SL;
  if (id == "sp2n") return Family::Sp2n;
  if (id == "so1n") return Family::SO0_1n;
  if (id == "su1n") return Family::SU_1n;
  if (id == "sp1n") return Family::Sp_1n;
  if (id == "sunm") return Family::SU_nm;
  if (id == "spnm") return Family::Sp_nm;
  throw Error(Errc::unsupported_group, "unknown group family '" + std::string(id) + "'");
}

std::string group_name(const GroupSpec& g) {
  const std::string n = std::to_string(g.n);
  const std::string k = g.field.kind == FieldKind::nonarchimedean ? "k_p" : std::string(field_id(g.field.kind));
  switch (g.family) {
    case Family::SL: return "SL(" + n + "," + k + ")";
    case Family::Sp2n: return "Sp(" + std::to_string(2 * g.n) + "," + k + ")";
    case Family::SO0_1n: return "SO0(1," + n + ")";
    case Family::SU_1n: return "SU(1," + n + ")";
    case Family::Sp_1n: return "Sp(1," + n + ")";
    case Family::SU_nm: return "SU(" + n + "," + std::to_string(g.m.value_or(0)) + ")";
    case Family::Sp_nm: return "Sp(" + n + "," + std::to_string(g.m.value_or(0)) + ")";
  }
  return "?";
}

std::string_view rep_id(RepKind kind) {
  switch (kind) {
    case RepKind::standard: return "standard";
    case RepKind::adjoint: return "adjoint";
    case RepKind::custom: return "custom";
  }
  return "?";
}

RepKind parse_rep(std::string_view id) {
  if (id == "standard") return RepKind::standard;
  if (id == "adjoint") return RepKind::adjoint;
  if (id == "custom") return RepKind::custom;
  throw Error(Errc::unsupported_representation, "unknown representation '" + std::string(id) + "'");
}

std::string_view mechanism_id(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::shell_improvement: return "shell_improvement";
    case Mechanism::howe_product: return "howe_product";
    case Mechanism::rank1_beta: return "rank1_beta";
  }
  return "?";
}

Mechanism parse_mechanism(std::string_view id) {
  if (id == "shell_improvement") return Mechanism::shell_improvement;
  if (id == "howe_product") return Mechanism::howe_product;
  if (id == "rank1_beta") return Mechanism::rank1_beta;
  throw Error(Errc::invalid_input, "unknown mechanism '" + std::string(id) + "'");
}

WeightVector lambda_basis_vector(int n, int i, const Rational& c) {
  WeightVector v = zero_weight(n);
  for (int j = i; j < n; ++j) v[j - 1] = 1;
  v[n - 1] = c;
  return v;
}

Rational lambda_basis_scale(const GroupSpec& g) {
  switch (g.family) {
    case Family::Sp2n: return Rational(1, 2);
    case Family::SU_nm:
    case Family::Sp_nm: return *g.m == g.n ? Rational(1, 2) : Rational(1);
    default: throw Error(Errc::unsupported_group, group_name(g) + " has no lambda basis");
  }
}

std::vector<RootEntry> lookup_root_data(const GroupSpec& g) {
  switch (g.family) {
    case Family::SL: {
      const int mult = field_multiplicity(g.field.kind);
      std::vector<RootEntry> roots;
      for (int i = 0; i < g.rank; ++i)
        for (int j = i; j < g.rank; ++j) {
          WeightVector r = zero_weight(g.rank);
          for (int k = i; k <= j; ++k) r[k] = 1;
          roots.push_back({r, mult});
        }
      return roots;
    }
    case Family::Sp2n: {
      const int mult = field_multiplicity(g.field.kind);
      return paired_roots(g.n, lambda_basis_scale(g), mult, 0, mult);
    }
    case Family::SO0_1n: return {{unit_weight(1, 0), g.n - 1}};
    case Family::SU_1n: return {{unit_weight(1, 0), 2 * (g.n - 1)}, {scaled(2, unit_weight(1, 0)), 1}};
    case Family::Sp_1n: return {{unit_weight(1, 0), 4 * (g.n - 1)}, {scaled(2, unit_weight(1, 0)), 3}};
    case Family::SU_nm: return paired_roots(g.n, lambda_basis_scale(g), 2, 2 * (*g.m - g.n), 1);
    case Family::Sp_nm: return paired_roots(g.n, lambda_basis_scale(g), 4, 4 * (*g.m - g.n), 3);
  }
  throw Error(Errc::unsupported_group, "unknown family");
}

RepWeights lookup_rep_weights(const GroupSpec& g, RepKind kind) {
  if (kind == RepKind::custom) no_rep(g, kind);
  switch (g.family) {
    case Family::SL: {
      if (kind == RepKind::adjoint) {
        if (g.n != 2 || g.field.kind == FieldKind::quaternion) no_rep(g, kind);
        const WeightVector a = unit_weight(1, 0);
        return make_rep_weights({{a, 1}, {zero_weight(1), 1}, {-a, 1}});
      }
      const int n = g.n;
      const int dim = g.field.kind == FieldKind::quaternion ? 4 : 1;
      std::vector<WeightEntry> entries;
      WeightVector w(g.rank);
      for (int j = 1; j < n; ++j) w[j - 1] = Rational(n - j, n);
      for (int i = 0; i < n; ++i) {
        entries.push_back({w, dim});
        if (i + 1 < n) w -= unit_weight(g.rank, i);
      }
      return make_rep_weights(std::move(entries));
    }
    case Family::Sp2n:
      if (kind != RepKind::standard) no_rep(g, kind);
      return paired_weights(g.n, lambda_basis_scale(g), 1, 0);
    case Family::SO0_1n:
      if (kind != RepKind::standard) no_rep(g, kind);
      return rank_one_chain(1, g.n - 1);
    case Family::SU_1n:
      if (kind != RepKind::standard) no_rep(g, kind);
      return rank_one_chain(2, 2 * (g.n - 1));
    case Family::Sp_1n:
      if (kind != RepKind::standard) no_rep(g, kind);
      return rank_one_chain(4, 4 * (g.n - 1));
    case Family::SU_nm:
      if (kind != RepKind::standard) no_rep(g, kind);
      return paired_weights(g.n, lambda_basis_scale(g), 2, 2 * (*g.m - g.n));
    case Family::Sp_nm:
      if (kind != RepKind::standard) no_rep(g, kind);
      return paired_weights(g.n, lambda_basis_scale(g), 4, 4 * (*g.m - g.n));
  }
  no_rep(g, kind);
}

ImprovementRecord lookup_improvement(const GroupSpec& g, RepKind kind) {
  ImprovementRecord rec;
  rec.group = g;
  rec.rep = kind;
  switch (g.family) {
    case Family::SL:
      if (kind == RepKind::standard && g.n == 3) {
        rec.gamma = -Rational(field_multiplicity(g.field.kind));
        rec.source = "SL(3,L) standard: the shell has the c0-disjoint property "
                     "(c0^2 for L=C, c0^4 for L=H); p <= 4";
        return rec;
      }
      if (kind == RepKind::adjoint && g.n == 2 && g.field.kind != FieldKind::quaternion) {
        rec.gamma = Rational(-1, 2);
        rec.log_correction = g.field.kind == FieldKind::nonarchimedean;
        rec.source = rec.log_correction
                         ? "SL(2,k) adjoint, k non-archimedean: c0^{1/2}(log c0) disjoint property"
                         : "SL(2,k) adjoint: W_{c0} has c0^{1/2} disjoint property";
        return rec;
      }
      break;
    case Family::SO0_1n:
      rec.gamma = Rational(-1, 2);
      rec.source = "SO0(1,n) standard: each W_{c0}^i has c0^{1/2}-disjoint property; p <= 2(n-1)";
      return rec;
    case Family::SU_1n:
      rec.gamma = -1;
      rec.source = "SU(1,n) standard: gamma=-1 and -gamma/2(lambda-varrho)=alpha_1; p <= 2n";
      return rec;
    case Family::Sp_1n:
      rec.gamma = -3;
      rec.source = "Sp(1,n) standard: gamma=-3 and -gamma/2(lambda-varrho)=3alpha_1; p <= (2+4n)/3";
      return rec;
    case Family::Sp2n:
      rec.gamma = -Rational(g.field.delta_factor);
      rec.mechanism = Mechanism::howe_product;
      rec.source = "Sp(2n,k) standard: (K, prod_i Xi_{H_{2lambda_i}}) bounded; p <= 2n for k=C";
      return rec;
    case Family::SU_nm:
      rec.gamma = -1;
      rec.mechanism = Mechanism::howe_product;
      rec.source = "SU(n,m) standard: Howe product over the weights +-lambda_i; p <= 2(n+m-1)";
      return rec;
    case Family::Sp_nm:
      rec.gamma = -3;
      rec.mechanism = Mechanism::howe_product;
      rec.source = "Sp(n,m) standard: Howe product over the weights +-lambda_i; p <= (4m+4n-2)/3";
      return rec;
  }
  no_improvement(g, kind);
}

WeightVector stated_modular_weight(const GroupSpec& g) {
  switch (g.family) {
    case Family::SL: {
      const int mult = field_multiplicity(g.field.kind);
      WeightVector v(g.rank);
      for (int j = 1; j <= g.rank; ++j) v[j - 1] = mult * j * (g.n - j);
      return v;
    }
    case Family::SO0_1n: return WeightVector::Constant(1, Rational(g.n - 1));
    case Family::SU_1n: return WeightVector::Constant(1, Rational(2 * g.n));
    case Family::Sp_1n: return WeightVector::Constant(1, Rational(4 * g.n + 2));
    default: break;
  }
  // Exponents stated on the lambda_i, converted once.
  const Rational c = lambda_basis_scale(g);
  WeightVector v = zero_weight(g.rank);
  for (int i = 1; i <= g.n; ++i) {
    Rational e;
    if (g.family == Family::Sp2n)
      e = 2 * (g.n + 1 - i) * field_multiplicity(g.field.kind);
    else if (g.family == Family::SU_nm)
      e = 2 * (g.n + *g.m - 2 * i) + 2;
    else
      e = 4 * g.n + 4 * *g.m + 6 - 8 * i;
    v += e * lambda_basis_vector(g.n, i, c);
  }
  return v;
}

const CatalogGroup* Catalog::find_group(const GroupSpec& group) const {
  auto it = std::find_if(groups.begin(), groups.end(), [&](const CatalogGroup& g) { return g.group == group; });
  return it == groups.end() ? nullptr : &*it;
}

const ImprovementRecord* Catalog::find_improvement(const GroupSpec& group, RepKind kind) const {
  auto it = std::find_if(improvements.begin(), improvements.end(), [&](const ImprovementRecord& r) {
    return r.group == group && r.rep == kind;
  });
  return it == improvements.end() ? nullptr : &*it;
}

namespace {

Catalog build_catalog() {
  std::vector<GroupSpec> groups;
  for (int n = 2; n <= 4; ++n)
    for (auto k : {FieldKind::real, FieldKind::complex, FieldKind::quaternion, FieldKind::nonarchimedean})
      groups.push_back(make_group(Family::SL, n, std::nullopt, k));
  for (int n = 1; n <= 8; ++n)
    for (auto k : {FieldKind::real, FieldKind::complex, FieldKind::nonarchimedean})
      groups.push_back(make_group(Family::Sp2n, n, std::nullopt, k));
  for (auto f : {Family::SO0_1n, Family::SU_1n, Family::Sp_1n})
    for (int n = 2; n <= 8; ++n) groups.push_back(make_group(f, n));
  for (auto f : {Family::SU_nm, Family::Sp_nm})
    for (int n = 2; n <= 8; ++n)
      for (int m = n; m <= 8; ++m) groups.push_back(make_group(f, n, m));

  Catalog cat;
  for (const auto& g : groups) {
    cat.groups.push_back({g, lookup_root_data(g), group_name(g) + " restricted roots with multiplicities"});
    for (auto kind : {RepKind::standard, RepKind::adjoint}) {
      RepWeights w;
      try {
        w = lookup_rep_weights(g, kind);
      } catch (const Error&) {
        continue;
      }
      cat.reps.push_back({g, kind, std::move(w), group_name(g) + " " + std::string(rep_id(kind)) + " weights"});
      try {
        cat.improvements.push_back(lookup_improvement(g, kind));
      } catch (const Error&) {
      }
    }
  }
  return cat;
}

}  // namespace

const Catalog& builtin_catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

}  // namespace semidecay
