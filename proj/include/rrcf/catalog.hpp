#pragma once

// Closed-form catalog: radical expressions for class invariants and
// continued-fraction values, stored as expression trees and evaluated at the
// precision of each request.

#include "rrcf/qseries.hpp"
#include "rrcf/radical.hpp"
#include "rrcf/real.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rrcf {

inline constexpr int kCatalogVersion = 1;

/// What the expression claims to equal.
///   g, G  : Ramanujan's class invariants at n
///   R     : R(exp(-pi sqrt(n)))
///   R5    : R(exp(-pi sqrt(n)))^5
///   yi_s  : s_n at q = exp(-2 pi sqrt(n/5))
enum class CatalogKind { g, G, R, R5, YiS };

std::string to_string(CatalogKind k);
CatalogKind catalog_kind_from_string(const std::string& s);

/// established: literature value; adopted: corrected form used downstream;
/// printed-mismatch / display-mismatch: forms recorded for reference that do
/// not match the product definition; conjectural: numerically supported only.
enum class CatalogStatus { Established, Adopted, PrintedMismatch, DisplayMismatch, Conjectural };

std::string to_string(CatalogStatus s);
CatalogStatus catalog_status_from_string(const std::string& s);

struct ClosedFormEntry {
  std::string name;
  CatalogKind kind;
  SurdArg arg;
  RadicalExpr expression;
  std::string citation;
  CatalogStatus status = CatalogStatus::Established;

  /// True for statuses whose expression is expected to match the definition.
  bool expected_to_match() const;

  nlohmann::json to_json() const;
  static ClosedFormEntry from_json(const nlohmann::json& j);
};

/// The value the entry claims to equal, computed from series and products.
Real catalog_reference_value(const ClosedFormEntry& e, const PrecisionCtx& ctx);

struct CatalogCheck {
  std::string name;
  Real relative_error;
  bool matches = false;
  bool as_expected = false;
};

/// Compares expression and reference at ctx; a match means relative error
/// below 10^-(digits - guard).
CatalogCheck check_entry(const ClosedFormEntry& e, const PrecisionCtx& ctx);

class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<ClosedFormEntry> entries) : entries_(std::move(entries)) {}

  /// Entries used by the reproduction pipelines.
  static const Catalog& builtin();

  const std::vector<ClosedFormEntry>& entries() const { return entries_; }
  const ClosedFormEntry& at(const std::string& name) const;
  std::optional<ClosedFormEntry> find(const std::string& name) const;

  nlohmann::json to_json() const;
  static Catalog from_json(const nlohmann::json& j);

 private:
  std::vector<ClosedFormEntry> entries_;
};

/// C = 4 G^8 (G^8 + sqrt(G^16 - G^-8)) as an expression in G.
RadicalExpr quadrupling_constant_expr(const RadicalExpr& G);
/// G_{4n} = (C + sqrt(C^3 + 8)/sqrt(C))^{1/8} / 2^{1/4}.
RadicalExpr G_of_4n_expr(const RadicalExpr& G);
/// sqrt(a^2 + 1) - a.
RadicalExpr yi_r5_expr(const RadicalExpr& a);

}  // namespace rrcf
