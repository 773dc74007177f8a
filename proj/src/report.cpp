#include "symrank/report.hpp"
#include "symrank/aronhold.hpp"
#include "symrank/exact_linalg.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace symrank {

std::string format_real(const WideReal& x, int digits) {
  if (x == 0) return "0";
  return x.str(std::max(1, digits) - 1, std::ios_base::scientific);
}

namespace {

int digits_for(int bits) { return static_cast<int>(std::floor(bits * 0.30102999566398120)); }

Json complex_json(const WideComplex& z, int digits) {
  return Json{{"re", format_real(z.re, digits)}, {"im", format_real(z.im, digits)}};
}

std::string complex_text(const WideComplex& z, int digits) {
  std::string s = format_real(z.re, digits);
  if (z.im != 0) s += (z.im < 0 ? " - " : " + ") + format_real(abs(z.im), digits) + "i";
  return "(" + s + ")";
}

Json binary_certificate(const BinaryRankReport& r) {
  return Json{{"type", "binary"},
              {"kernel_split", {r.degree - r.border_rank, r.border_rank}},
              {"kernel_dimension", r.kernel_dimension},
              {"kernel_vector", to_string(r.kernel_vector)},
              {"squarefree", r.squarefree}};
}

}  // namespace

Json to_json(const LinearChange& c) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < c.matrix.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < c.matrix.cols(); ++j) row.push_back(to_string(c.matrix(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const BinaryRankReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["border_rank"] = r.border_rank;
  j["rank"] = r.rank;
  j["stratum"] = r.stratum.label();
  j["tangential"] = r.tangential;
  j["certificate"] = binary_certificate(r);
  return j;
}

Json to_json(const GeneralRankReport& r) {
  Json j;
  j["nvars"] = r.nvars;
  j["degree"] = r.degree;
  j["essential_variables"] = r.essential.m;
  j["change"] = to_json(r.essential.change);
  j["reduced"] = to_string(r.essential.reduced);
  j["border_rank"] = r.border_rank;
  j["border_lower_bound"] = r.border_lower_bound;
  j["rank"] = r.rank ? Json(*r.rank) : Json(nullptr);
  j["possible_ranks"] = r.possible_ranks;
  j["stratum"] = r.stratum();
  j["covered"] = r.covered;
  j["classical"] = r.classical;
  Json cert = Json::object();
  if (r.binary) cert["binary"] = binary_certificate(*r.binary);
  if (r.aronhold) cert["aronhold"] = to_string(*r.aronhold);
  if (r.catalecticant)
    cert["catalecticant"] = Json{{"i", r.catalecticant->i}, {"j", r.catalecticant->j}, {"rank", r.catalecticant->rank}};
  if (r.net) {
    Json gens = Json::array();
    for (const auto& g : r.net->generators) gens.push_back(to_string(g));
    cert["conic_net"] = gens;
  }
  if (r.base_locus)
    cert["base_locus"] = Json{{"algebra_dim", r.base_locus->algebra_dim},
                              {"distinct_points", r.base_locus->distinct_points},
                              {"charpoly_squarefree_degree", r.base_locus->charpoly_squarefree_degree},
                              {"seed", r.base_locus->seed}};
  j["certificate"] = cert;
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["mode"] = d.mode == Decomposition::Mode::exact ? "exact" : "numeric";
  j["nvars"] = d.nvars;
  j["degree"] = d.degree;
  j["terms"] = Json::array();
  if (d.mode == Decomposition::Mode::exact) {
    for (size_t k = 0; k < d.weights.size(); ++k) {
      Json form = Json::array();
      for (Eigen::Index v = 0; v < d.linear_forms[k].size(); ++v) form.push_back(to_string(d.linear_forms[k][v]));
      j["terms"].push_back(Json{{"weight", to_string(d.weights[k])}, {"form", form}});
    }
    j["residual"] = 0;
  } else {
    const int digits = digits_for(d.precision_bits);
    for (size_t k = 0; k < d.numeric_weights.size(); ++k) {
      Json form = Json::array();
      for (const auto& c : d.numeric_forms[k]) form.push_back(complex_json(c, digits));
      j["terms"].push_back(Json{{"weight", complex_json(d.numeric_weights[k], digits)}, {"form", form}});
    }
    std::ostringstream res;
    res.precision(3);
    res << std::scientific << d.residual;
    j["residual"] = res.str();
    j["precision_bits"] = d.precision_bits;
    j["digits"] = digits;
  }
  return j;
}

Json to_json(const CatalecticantMatrix& m) {
  auto label = [&](const MultiIndex& e) {
    SymmetricForm mono = SymmetricForm::from_terms(m.nvars, static_cast<int>(std::accumulate(e.begin(), e.end(), 0)),
                                                   {{e, Rational(1)}});
    return to_string(mono);
  };
  Json j;
  j["split"] = {m.i, m.j};
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto& r : m.row_labels) rows.push_back(label(r));
  for (const auto& c : m.col_labels) cols.push_back(label(c));
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) row.push_back(to_string(m.entries(r, c)));
    entries.push_back(row);
  }
  j["row_labels"] = rows;
  j["col_labels"] = cols;
  j["entries"] = entries;
  j["rank"] = rank_exact(m);
  Json kernel = Json::array();
  for (const auto& g : right_kernel_basis(m)) kernel.push_back(to_string(g));
  j["kernel"] = kernel;
  return j;
}

Json to_json(const NumericDecomposition& d) {
  Json j;
  j["terms"] = Json::array();
  for (size_t k = 0; k < d.weights.size(); ++k) j["terms"].push_back(Json{{"weight", d.weights[k]}, {"form", d.linear_forms[k]}});
  std::ostringstream res;
  res.precision(3);
  res << std::scientific << d.residual;
  j["residual"] = res.str();
  j["restarts_used"] = d.restarts_used;
  return j;
}

// ---------------------------------------------------------------------------

std::string to_text(const BinaryRankReport& r) {
  std::ostringstream out;
  out << "degree         " << r.degree << "\n"
      << "border rank    " << r.border_rank << "\n"
      << "rank           " << r.rank << "\n"
      << "stratum        " << r.stratum.label() << "\n"
      << "tangential     " << (r.tangential ? "yes" : "no") << "\n"
      << "apolar form    " << to_string(r.kernel_vector) << "  (kernel of M_{" << r.degree - r.border_rank << ","
      << r.border_rank << "}, dimension " << r.kernel_dimension << ", "
      << (r.squarefree ? "squarefree" : "not squarefree") << ")\n";
  return out.str();
}

std::string to_text(const GeneralRankReport& r) {
  std::ostringstream out;
  out << "variables      " << r.nvars << " (" << r.essential.m << " essential)\n"
      << "degree         " << r.degree << "\n"
      << "border rank    " << (r.border_lower_bound ? ">= " : "") << r.border_rank << "\n"
      << "rank           " << (r.rank ? std::to_string(*r.rank) : std::string("undetermined")) << "\n";
  if (!r.possible_ranks.empty()) {
    out << "possible ranks {";
    for (size_t k = 0; k < r.possible_ranks.size(); ++k) out << (k ? ", " : "") << r.possible_ranks[k];
    out << "}\n";
  }
  out << "stratum        " << r.stratum() << "\n"
      << "branch         " << r.branch << "\n";
  if (r.classical) out << "note           border rank from the classical determinant test\n";
  if (r.essential.m < r.nvars) out << "reduced form   " << to_string(r.essential.reduced) << "\n";
  if (r.binary)
    out << "apolar form    " << to_string(r.binary->kernel_vector) << " ("
        << (r.binary->squarefree ? "squarefree" : "not squarefree") << ")\n";
  if (r.aronhold) out << "aronhold       " << to_string(*r.aronhold) << "\n";
  if (r.catalecticant)
    out << "catalecticant  rank M_{" << r.catalecticant->i << "," << r.catalecticant->j << "} = " << r.catalecticant->rank
        << "\n";
  if (r.net) {
    out << "apolar conics  ";
    for (size_t k = 0; k < 3; ++k) out << (k ? ", " : "") << to_string(r.net->generators[k]);
    out << "\n";
  }
  if (r.base_locus)
    out << "base locus     " << r.base_locus->distinct_points << " distinct point(s), algebra dimension "
        << r.base_locus->algebra_dim << "\n";
  return out.str();
}

std::string to_text(const Decomposition& d) {
  std::ostringstream out;
  const bool exact = d.mode == Decomposition::Mode::exact;
  out << (exact ? "exact" : "numeric") << " decomposition with " << d.size() << " term(s)";
  if (!exact) out << ", " << d.precision_bits << "-bit roots, residual " << d.residual;
  out << "\n";
  const int digits = exact ? 0 : std::min(20, digits_for(d.precision_bits));
  for (size_t k = 0; k < d.size(); ++k) {
    out << "  ";
    if (exact) {
      out << to_string(d.weights[k]) << " * (" << to_string(linear_form<Rational>(d.linear_forms[k])) << ")^" << d.degree;
    } else {
      out << complex_text(d.numeric_weights[k], digits) << " * (";
      for (size_t v = 0; v < d.numeric_forms[k].size(); ++v)
        out << (v ? " + " : "") << complex_text(d.numeric_forms[k][v], digits) << "*x" << v;
      out << ")^" << d.degree;
    }
    out << "\n";
  }
  return out.str();
}

std::string to_text(const CatalecticantMatrix& m) {
  const Json j = to_json(m);
  std::vector<std::string> rows, cols;
  for (const auto& r : j["row_labels"]) rows.push_back(r.get<std::string>());
  for (const auto& c : j["col_labels"]) cols.push_back(c.get<std::string>());
  size_t w = 1;
  for (const auto& s : rows) w = std::max(w, s.size());
  for (const auto& s : cols) w = std::max(w, s.size());
  for (const auto& row : j["entries"])
    for (const auto& e : row) w = std::max(w, e.get<std::string>().size());
  auto pad = [w](const std::string& s) { return std::string(w + 1 - s.size(), ' ') + s; };
  std::ostringstream out;
  out << "M_{" << m.i << "," << m.j << "}  rank " << j["rank"].get<int>() << "\n" << pad("");
  for (const auto& c : cols) out << pad(c);
  out << "\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    out << pad(rows[r]);
    for (const auto& e : j["entries"][r]) out << pad(e.get<std::string>());
    out << "\n";
  }
  out << "kernel";
  if (j["kernel"].empty()) out << " (trivial)";
  out << "\n";
  for (const auto& g : j["kernel"]) out << "  " << g.get<std::string>() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

VerifyResult fail(const std::string& why) { return {false, why}; }

VerifyResult verify_binary(const Json& cert, const SymmetricForm& f, int border, int rank) {
  const int d = f.degree();
  const SymmetricForm q = parse_form(cert.at("kernel_vector").get<std::string>(), 2);
  if (q.nvars() != 2 || q.degree() != border) return fail("apolar form has the wrong shape");
  if (!apply_differential(q, f).is_zero()) return fail("apolar form does not annihilate the input");
  if (border > 1 && !right_kernel_basis(build_catalecticant(f, d - border + 1, border - 1)).empty())
    return fail("a smaller apolar form exists");
  const bool sf = binary_squarefree(q);
  if (sf != cert.at("squarefree").get<bool>()) return fail("squarefree flag is wrong");
  if (rank != (sf ? border : d - border + 2)) return fail("rank does not follow from the apolar form");
  return {};
}

}  // namespace

VerifyResult verify_document(const Json& doc, const SymmetricForm& f) {
  try {
    if (doc.at("schema") != kSchema) return fail("unknown schema");
    if (doc.contains("error")) return fail("document carries an error");
    const std::string cmd = doc.at("command").get<std::string>();
    if (cmd == "decompose") {
      const Json& dec = doc.at("decomposition");
      if (dec.at("mode") != "exact") return {true, "numeric decomposition: residual only"};
      Decomposition d;
      for (const auto& t : dec.at("terms")) {
        d.weights.push_back(parse_rational(t.at("weight").get<std::string>()));
        RationalVector l(static_cast<Eigen::Index>(t.at("form").size()));
        for (size_t v = 0; v < t.at("form").size(); ++v)
          l[static_cast<Eigen::Index>(v)] = parse_rational(t.at("form")[v].get<std::string>());
        d.linear_forms.push_back(std::move(l));
      }
      if (!(reconstruct_exact(d, f.nvars(), f.degree()) == f)) return fail("decomposition does not reconstruct");
      return {};
    }
    const Json& cert = doc.at("certificate");
    if (cert.contains("type") && cert.at("type") == "binary")
      return verify_binary(cert, f, doc.at("border_rank").get<int>(), doc.at("rank").get<int>());

    // General report: the recorded change and reduced form must reproduce f.
    const int n = f.nvars();
    RationalMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = parse_rational(doc.at("change")[i][j].get<std::string>());
    const int m = doc.at("essential_variables").get<int>();
    const SymmetricForm reduced = parse_form(doc.at("reduced").get<std::string>(), m);
    if (reduced.nvars() != m) return fail("reduced form has the wrong number of variables");
    if (!(apply_linear_change(embed(reduced, n), LinearChange{a}) == f)) return fail("reduction does not reproduce input");
    if (catalecticant_rank(f, 1) != m) return fail("essential variable count is wrong");
    const bool has_rank = !doc.at("rank").is_null();
    if (cert.contains("binary")) {
      if (!has_rank) return fail("binary certificate without a rank");
      return verify_binary(cert.at("binary"), reduced, doc.at("border_rank").get<int>(), doc.at("rank").get<int>());
    }
    if (cert.contains("aronhold")) {
      if (aronhold_eval(reduced) != parse_rational(cert.at("aronhold").get<std::string>()))
        return fail("Aronhold value is wrong");
    }
    if (cert.contains("catalecticant")) {
      const Json& c = cert.at("catalecticant");
      if (catalecticant_rank(reduced, c.at("i").get<int>()) != c.at("rank").get<int>())
        return fail("catalecticant rank is wrong");
    }
    if (cert.contains("conic_net")) {
      ConicNet net;
      for (int k = 0; k < 3; ++k) {
        net.generators[k] = parse_form(cert.at("conic_net")[k].get<std::string>(), 3);
        if (!apply_differential(net.generators[k], reduced).is_zero()) return fail("conic is not apolar");
      }
      const auto& bl = cert.at("base_locus");
      const BaseLocusSummary again = base_locus_summary(net, bl.at("seed").get<std::uint64_t>() + 1);
      if (again.distinct_points != bl.at("distinct_points").get<int>()) return fail("base locus count is wrong");
    }
    if (doc.at("rank").is_null() && doc.at("border_lower_bound").get<bool>() == false &&
        doc.at("possible_ranks").empty() && doc.at("covered").get<bool>())
      return fail("covered report without rank information");
    return {};
  } catch (const std::exception& e) {
    return fail(std::string("malformed document: ") + e.what());
  }
}

}  // namespace symrank
