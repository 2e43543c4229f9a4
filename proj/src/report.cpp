#include "ncflab/report.hpp"

#include <cctype>
#include <sstream>

#include "ncflab/anf.hpp"

namespace ncflab {

using nlohmann::json;

namespace {

bool looks_like_table(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (std::size_t i = 0; i < colon; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

json optional_bool(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

BooleanFunction parse_function_spec(std::string_view text, std::optional<int> arity) {
  text = trim(text);
  if (looks_like_table(text)) {
    auto f = parse_hex_table(text);
    if (arity && *arity != f.arity()) throw InputError("table arity differs from requested arity");
    return f;
  }
  const AnfPolynomial p = arity ? parse_anf(text, *arity) : parse_anf(text);
  if (p.arity() > kMaxDenseArity) throw InputError("arity exceeds " + std::to_string(kMaxDenseArity));
  return anf_to_table(p);
}

AnalysisReport analyze(const BooleanFunction& f, const AnalysisOptions& options) {
  AnalysisReport r;
  r.arity = f.arity();
  r.anf = format_anf(table_to_anf(f));
  r.table = to_hex_table(f);

  ProfileOptions po;
  po.witnesses = options.witnesses;
  po.block_sensitivity = options.block_sensitivity;
  po.limits = options.limits;
  r.profile = cert_profile(f, po);
  r.symmetry = symmetry_report(f, options.automorphism);
  r.agreement.c_is_max_of_fibers = r.profile.c == std::max(r.profile.c0, r.profile.c1);

  if (f.arity() >= 2) {
    r.ncf = decompose(f);
    if (r.ncf->is_ncf()) {
      const auto& d = r.ncf->decomposition();
      const CertTriple formula = ncf_cert_formula(layer_structure(d), d.b);
      r.agreement.cert_formula = formula == CertTriple{r.profile.c0, r.profile.c1, r.profile.c};
      r.agreement.sensitivity_equals_c = r.profile.sensitivity == r.profile.c;
      if (r.profile.block_sensitivity) {
        r.agreement.block_equals_sensitivity = *r.profile.block_sensitivity == r.profile.sensitivity;
      }
      r.agreement.asymmetry_criterion = r.symmetry.strongly_asymmetric == (r.symmetry.s == f.arity());
      r.structural = ncf_symmetry_checks(d, r.symmetry.partition);
    }
  }
  return r;
}

json to_json(const ComplexityProfile& p) {
  json j;
  j["c0"] = p.c0;
  j["c1"] = p.c1;
  j["c"] = p.c;
  j["s"] = p.sensitivity;
  j["bs"] = p.block_sensitivity ? json(*p.block_sensitivity) : json(nullptr);
  json witnesses = json::array();
  if (p.witnesses) {
    for (const auto& w : *p.witnesses) {
      witnesses.push_back({{"word", w.word.to_string()}, {"size", w.size}, {"certificate", w.certificate}});
    }
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

json to_json(const SymmetryReport& r) {
  json j;
  j["s"] = r.s;
  j["classes"] = r.partition.classes;
  j["partially_symmetric"] = r.partially_symmetric;
  j["totally_symmetric"] = r.totally_symmetric;
  j["strongly_asymmetric"] = r.strongly_asymmetric;
  j["witness"] = r.witness ? json(r.witness->to_cycle_string()) : json(nullptr);
  return j;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["input"] = {{"anf", r.anf}, {"table", r.table}, {"n", r.arity}};
  json ncf;
  if (!r.ncf) {
    ncf = {{"is_ncf", false}, {"reason", "arity below 2"}, {"decomposition", nullptr}, {"layer_structure", nullptr}};
  } else if (r.ncf->is_ncf()) {
    const auto& d = r.ncf->decomposition();
    ncf = {{"is_ncf", true},
           {"reason", nullptr},
           {"decomposition", format_decomposition(d)},
           {"layer_structure", layer_structure(d)}};
  } else {
    ncf = {{"is_ncf", false},
           {"reason", to_string(r.ncf->reason())},
           {"decomposition", nullptr},
           {"layer_structure", nullptr}};
  }
  if (r.structural) {
    json checks;
    for (const auto& c : r.structural->checks) checks[c.name] = c.pass;
    ncf["symmetry_checks"] = checks;
  } else {
    ncf["symmetry_checks"] = nullptr;
  }
  j["ncf"] = std::move(ncf);
  j["complexity"] = to_json(r.profile);
  j["complexity"]["degenerate"] = r.profile.degenerate;
  j["symmetry"] = to_json(r.symmetry);
  j["agreement"] = {{"c_is_max_of_fibers", r.agreement.c_is_max_of_fibers},
                    {"cert_formula", optional_bool(r.agreement.cert_formula)},
                    {"sensitivity_equals_c", optional_bool(r.agreement.sensitivity_equals_c)},
                    {"block_equals_sensitivity", optional_bool(r.agreement.block_equals_sensitivity)},
                    {"asymmetry_criterion", optional_bool(r.agreement.asymmetry_criterion)}};
  return j;
}

json to_json(const VerifyReport& r) {
  json j = json::object();
  for (const auto& [name, c] : r.checks) {
    j[name] = {{"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}};
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "function:        " << r.anf << "\n";
  out << "table:           " << r.table << "\n";
  if (!r.ncf) {
    out << "ncf:             no (arity below 2)\n";
  } else if (r.ncf->is_ncf()) {
    const auto& d = r.ncf->decomposition();
    out << "ncf:             yes\n";
    out << "decomposition:   " << format_decomposition(d) << "\n";
    out << "layer structure: <";
    const auto k = layer_structure(d);
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ">\n";
  } else {
    out << "ncf:             no (" << to_string(r.ncf->reason()) << ")\n";
  }
  out << "C0, C1, C:       " << r.profile.c0 << ", " << r.profile.c1 << ", " << r.profile.c
      << (r.profile.degenerate ? " (constant)" : "") << "\n";
  out << "sensitivity:     " << r.profile.sensitivity << "\n";
  if (r.profile.block_sensitivity) out << "block sens.:     " << *r.profile.block_sensitivity << "\n";
  out << "symmetry level:  " << r.symmetry.s << "\n";
  out << "classes:         ";
  for (const auto& cls : r.symmetry.partition.classes) {
    out << "{";
    for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
    out << "}";
  }
  out << "\n";
  out << "partially sym.:  " << yes_no(r.symmetry.partially_symmetric) << "\n";
  out << "totally sym.:    " << yes_no(r.symmetry.totally_symmetric) << "\n";
  out << "strongly asym.:  " << yes_no(r.symmetry.strongly_asymmetric);
  if (r.symmetry.witness) out << " (automorphism " << r.symmetry.witness->to_cycle_string() << ")";
  out << "\n";
  if (r.agreement.cert_formula) out << "formula check:   " << (*r.agreement.cert_formula ? "agrees" : "DISAGREES") << "\n";
  if (r.profile.witnesses) {
    out << "certificates:\n";
    for (const auto& w : *r.profile.witnesses) {
      out << "  " << w.word.to_string() << "  C=" << w.size << "  {";
      for (std::size_t i = 0; i < w.certificate.size(); ++i) out << (i ? "," : "") << w.certificate[i];
      out << "}\n";
    }
  }
  return out.str();
}

std::string to_csv(const CountTable& t, const std::set<std::string>& kinds) {
  auto wanted = [&](const std::string& k) { return kinds.empty() || kinds.count(k) > 0; };
  std::ostringstream out;
  out << "n,r_or_s,kind,value\n";
  if (wanted("total")) out << t.n << ",,total," << t.total << "\n";
  if (wanted("layers")) {
    for (const auto& [r, v] : t.by_layers) out << t.n << "," << r << ",layers," << v << "\n";
  }
  if (wanted("symmetry")) {
    for (const auto& [s, v] : t.by_symmetry) out << t.n << "," << s << ",symmetry," << v << "\n";
  }
  if (wanted("strongly_asymmetric")) out << t.n << "," << t.n << ",strongly_asymmetric," << t.strongly_asymmetric << "\n";
  if (wanted("strongly_asym_max_layers")) {
    out << t.n << "," << t.n - 1 << ",strongly_asym_max_layers," << t.strongly_asym_max_layers << "\n";
  }
  return out.str();
}

}  // namespace ncflab
