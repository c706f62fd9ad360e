#include "rrcf/catalog.hpp"

#include "rrcf/errors.hpp"
#include "rrcf/invariants.hpp"
#include "rrcf/recognition.hpp"

namespace rrcf {

std::string to_string(CatalogKind k) {
  switch (k) {
    case CatalogKind::g:
      return "g";
    case CatalogKind::G:
      return "G";
    case CatalogKind::R:
      return "R";
    case CatalogKind::R5:
      return "R5";
    case CatalogKind::YiS:
      return "yi_s";
  }
  return "?";
}

CatalogKind catalog_kind_from_string(const std::string& s) {
  if (s == "g") return CatalogKind::g;
  if (s == "G") return CatalogKind::G;
  if (s == "R") return CatalogKind::R;
  if (s == "R5") return CatalogKind::R5;
  if (s == "yi_s") return CatalogKind::YiS;
  throw DomainError("unknown catalog kind '" + s + "'");
}

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Established:
      return "established";
    case CatalogStatus::Adopted:
      return "adopted";
    case CatalogStatus::PrintedMismatch:
      return "printed-mismatch";
    case CatalogStatus::DisplayMismatch:
      return "display-mismatch";
    case CatalogStatus::Conjectural:
      return "conjectural";
  }
  return "?";
}

CatalogStatus catalog_status_from_string(const std::string& s) {
  if (s == "established") return CatalogStatus::Established;
  if (s == "adopted") return CatalogStatus::Adopted;
  if (s == "printed-mismatch") return CatalogStatus::PrintedMismatch;
  if (s == "display-mismatch") return CatalogStatus::DisplayMismatch;
  if (s == "conjectural") return CatalogStatus::Conjectural;
  throw DomainError("unknown catalog status '" + s + "'");
}

bool ClosedFormEntry::expected_to_match() const {
  return status != CatalogStatus::PrintedMismatch && status != CatalogStatus::DisplayMismatch;
}

nlohmann::json ClosedFormEntry::to_json() const {
  return {{"name", name},
          {"kind", to_string(kind)},
          {"n", {arg.num(), arg.den()}},
          {"expression", expression.to_json()},
          {"text", expression.to_string()},
          {"citation", citation},
          {"status", to_string(status)}};
}

ClosedFormEntry ClosedFormEntry::from_json(const nlohmann::json& j) {
  const auto& n = j.at("n");
  return ClosedFormEntry{j.at("name").get<std::string>(),
                         catalog_kind_from_string(j.at("kind").get<std::string>()),
                         SurdArg(n.at(0).get<std::int64_t>(), n.at(1).get<std::int64_t>()),
                         RadicalExpr::from_json(j.at("expression")),
                         j.value("citation", ""),
                         catalog_status_from_string(j.value("status", "established"))};
}

Real catalog_reference_value(const ClosedFormEntry& e, const PrecisionCtx& ctx) {
  switch (e.kind) {
    case CatalogKind::g:
      return ramanujan_g(e.arg, ctx);
    case CatalogKind::G:
      return ramanujan_G(e.arg, ctx);
    case CatalogKind::R:
      return eval_R_product(e.arg, ctx);
    case CatalogKind::R5:
      return pow(eval_R_product(e.arg, ctx), 5);
    case CatalogKind::YiS:
      return yi_s(e.arg, ctx);
  }
  throw DomainError("unknown catalog kind");
}

CatalogCheck check_entry(const ClosedFormEntry& e, const PrecisionCtx& ctx) {
  const Real expr = e.expression.evaluate(ctx);
  const Real ref = catalog_reference_value(e, ctx);
  CatalogCheck c;
  c.name = e.name;
  c.relative_error = relative_difference(expr, ref);
  c.matches = c.relative_error < pow10(-(ctx.digits - ctx.guard), ctx.working_bits());
  c.as_expected = c.matches == e.expected_to_match();
  return c;
}

RadicalExpr quadrupling_constant_expr(const RadicalExpr& G) {
  const RadicalExpr g8 = G.pow(8);
  const RadicalExpr inner = (G.pow(16) - RadicalExpr::integer(1) / g8).sqrt();
  return RadicalExpr::integer(4) * g8 * (g8 + inner);
}

RadicalExpr G_of_4n_expr(const RadicalExpr& G) {
  const RadicalExpr C = quadrupling_constant_expr(G);
  const RadicalExpr body = C + (C.pow(3) + RadicalExpr::integer(8)).sqrt() / C.sqrt();
  return body.pow(1, 8) / RadicalExpr::integer(2).pow(1, 4);
}

RadicalExpr yi_r5_expr(const RadicalExpr& a) { return (a * a + RadicalExpr::integer(1)).sqrt() - a; }

namespace {

constexpr const char* kNotebooks = "B. C. Berndt, Ramanujan's Notebooks, Part V, Springer, 1998";

Catalog make_builtin() {
  std::vector<ClosedFormEntry> v;
  auto add = [&](std::string name, CatalogKind kind, SurdArg arg, RadicalExpr e, std::string cite,
                 CatalogStatus st = CatalogStatus::Established) {
    v.push_back(ClosedFormEntry{std::move(name), kind, arg, std::move(e), std::move(cite), st});
  };
  const auto P = [](const char* text) { return RadicalExpr::parse(text); };

  add("g_130", CatalogKind::g, SurdArg(130), P("((sqrt(5)+1)/2)^(3/2)*((sqrt(13)+3)/2)^(1/2)"),
      std::string(kNotebooks) + ", p. 203");
  add("G_130", CatalogKind::G, SurdArg(130),
      P("((161+72*sqrt(5))*(119+33*sqrt(13))+6*sqrt(40779771+18236316*sqrt(5)+11309683*sqrt(13)+5058108*sqrt(65)))"
        "^(1/8)/2^(1/4)"),
      "from g_130 via G_n^8 = (g_n^8 + sqrt(g_n^8 (1 + g_n^24))/g_n^8)/2");
  add("g_190", CatalogKind::g, SurdArg(190), P("((1+sqrt(5))/2)^(3/2)*(3+sqrt(10))^(1/2)"), kNotebooks);
  add("G_190", CatalogKind::G, SurdArg(190),
      P("(2/(((1+sqrt(5))^12*(3+sqrt(10))^4)/4096+sqrt(4096/((1+sqrt(5))^12*(3+sqrt(10))^4)+"
        "((1+sqrt(5))^24*(3+sqrt(10))^8)/16777216)))^(-1/8)"),
      "from g_190 via G_n^8 = (g_n^8 + sqrt(g_n^8 (1 + g_n^24))/g_n^8)/2");

  const RadicalExpr G15 = P("2^(1/4)*((1+sqrt(5))/2)^(1/3)");
  add("G_15", CatalogKind::G, SurdArg(15), G15, std::string(kNotebooks) + ", p. 190", CatalogStatus::Adopted);
  add("G_15_printed", CatalogKind::G, SurdArg(15), P("2^(1/4)*((1+sqrt(5))/2)^(1/5)"),
      "exponent 1/5 as sometimes printed; disagrees with the product definition", CatalogStatus::PrintedMismatch);
  const RadicalExpr G60 = G_of_4n_expr(G15);
  add("G_60", CatalogKind::G, SurdArg(60), G60, "G_15 quadrupled via g_{4n} = 2^{1/4} g_n G_n",
      CatalogStatus::Adopted);
  add("G_240", CatalogKind::G, SurdArg(240), G_of_4n_expr(G60), "G_60 quadrupled via g_{4n} = 2^{1/4} g_n G_n",
      CatalogStatus::Adopted);
  {
    const RadicalExpr C60 = quadrupling_constant_expr(G60);
    const RadicalExpr display =
        ((C60 + (C60.pow(3) + RadicalExpr::integer(8)).sqrt()) / C60.sqrt()).pow(1, 8) /
        RadicalExpr::integer(2).pow(1, 4);
    add("G_240_display", CatalogKind::G, SurdArg(240), display,
        "((C + sqrt(C^3 + 8))/sqrt(C))^{1/8}/2^{1/4}: square root misplaced", CatalogStatus::DisplayMismatch);
  }

  add("R_4", CatalogKind::R, SurdArg(4), P("sqrt((5+sqrt(5))/2)-(sqrt(5)+1)/2"),
      "S. Ramanujan, first letter to G. H. Hardy (1913)");
  add("R_64", CatalogKind::R, SurdArg(64),
      yi_r5_expr(P("(1+sqrt(5)*(3+sqrt(2)+sqrt(2)*5^(1/4)-sqrt(5))/(3+sqrt(2)-sqrt(2)*5^(1/4)-sqrt(5)))/2")),
      "B. C. Berndt and H. H. Chan, Some values for the Rogers-Ramanujan continued fraction, "
      "Canad. J. Math. 47 (1995)");

  const char* icosa = "icosahedral equation with an order-25 modular relation";
  add("R5_26/5", CatalogKind::R5, SurdArg(26, 5),
      yi_r5_expr(P("208818-93240*sqrt(5)-57825*sqrt(13)+25900*sqrt(65)")), icosa);
  add("R5_38/5", CatalogKind::R5, SurdArg(38, 5),
      yi_r5_expr(P("4165218+2945250*sqrt(2)-1862095*sqrt(5)-1316700*sqrt(10)")), icosa);
  add("R5_48/5", CatalogKind::R5, SurdArg(48, 5),
      yi_r5_expr(P("2118+1885/2*sqrt(5)+4875/4*sqrt(3)+2175/4*sqrt(15)")), icosa);
  add("R5_16/15", CatalogKind::R5, SurdArg(16, 15),
      yi_r5_expr(P("(8472+4875*sqrt(3)-3770*sqrt(5)-2175*sqrt(15))/4")), "numerical evidence only",
      CatalogStatus::Conjectural);
  add("s_13/2", CatalogKind::YiS, SurdArg(13, 2), P("-37296+16705*sqrt(5)+2*sqrt(65*(10716449-4792536*sqrt(5)))"),
      "integer-relation search on s_n, Q(sqrt 5, sqrt 13)");
  return Catalog(std::move(v));
}

}  // namespace

const Catalog& Catalog::builtin() {
  static const Catalog c = make_builtin();
  return c;
}

std::optional<ClosedFormEntry> Catalog::find(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

const ClosedFormEntry& Catalog::at(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw DomainError("no catalog entry named '" + name + "'");
}

nlohmann::json Catalog::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries_) arr.push_back(e.to_json());
  return {{"version", kCatalogVersion}, {"entries", arr}};
}

Catalog Catalog::from_json(const nlohmann::json& j) {
  const int version = j.at("version").get<int>();
  if (version != kCatalogVersion) {
    throw DomainError("unsupported catalog version " + std::to_string(version));
  }
  std::vector<ClosedFormEntry> v;
  for (const auto& e : j.at("entries")) v.push_back(ClosedFormEntry::from_json(e));
  return Catalog(std::move(v));
}

}  // namespace rrcf
