#include "symrank/cli.hpp"
#include "symrank/aronhold.hpp"
#include "symrank/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace symrank::cli {

namespace {

struct Outcome {
  Json doc;
  std::string text;     // multi-line human rendering
  std::string summary;  // one-line rendering for batch text mode
  int code = ok;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid:
    case ErrorKind::zero_form: return usage;
    case ErrorKind::not_covered: return not_covered;
    default: return internal;
  }
}

Json header(const Request& rq, const std::string& input) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = SYMRANK_VERSION;
  j["command"] = rq.command;
  if (!input.empty()) j["input"] = input;
  return j;
}

void merge_into(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

std::string binary_branch(const BinaryRankReport& r) {
  return "binary algorithm: first apolar form has degree " + std::to_string(r.border_rank) + " and is " +
         (r.squarefree ? "squarefree -> rank b" : "not squarefree -> rank d-b+2");
}

GeneralRankReport classify_general(const SymmetricForm& f, std::uint64_t seed) {
  GeneralRankReport rep = classify(f, seed);
  if (!rep.rank && !rep.border_lower_bound && rep.possible_ranks.empty()) {
    try {
      rep.possible_ranks = possible_ranks(std::max(1, rep.essential.m - 1), f.degree(), rep.border_rank);
    } catch (const Error&) {
      rep.covered = false;
    }
  }
  return rep;
}

Outcome general_outcome(const Request& rq, const std::string& input, const GeneralRankReport& rep) {
  Outcome o;
  o.doc = header(rq, input);
  o.doc["branch"] = rep.branch;
  merge_into(o.doc, to_json(rep));
  o.text = to_text(rep);
  o.summary = input + ": " + rep.stratum() + " (" + rep.branch + ")";
  o.code = rep.covered ? ok : not_covered;
  return o;
}

Outcome do_rank(const Request& rq, const std::string& input) {
  const SymmetricForm f = parse_form(input, 2);
  if (f.nvars() == 2) {
    const BinaryRankReport r = ssra(f);
    Outcome o;
    o.doc = header(rq, input);
    o.doc["branch"] = binary_branch(r);
    merge_into(o.doc, to_json(r));
    o.text = to_text(r);
    o.summary = input + ": " + r.stratum.label() + (r.tangential ? " tangential" : "");
    return o;
  }
  return general_outcome(rq, input, classify_general(f, rq.seed));
}

Outcome do_decompose(const Request& rq, const std::string& input) {
  const SymmetricForm f = parse_form(input, 2);
  Decomposition dec = waring_decompose(f, rq.seed, rq.precision);
  const std::string branch =
      std::string(f.nvars() == 2 ? "binary" : "reduced to two essential variables, binary") +
      " decomposition from an apolar form of degree " + std::to_string(dec.apolar_degree);
  const double residual = numeric_residual(dec, f);
  if (dec.mode == Decomposition::Mode::exact && residual != 0.0)
    throw Error(ErrorKind::internal, "exact decomposition does not reconstruct the input");
  dec.residual = residual;
  Outcome o;
  o.doc = header(rq, input);
  o.doc["branch"] = branch;
  o.doc["decomposition"] = to_json(dec);
  o.text = to_text(dec);
  o.summary = input + ": " + std::to_string(dec.size()) + " terms, " +
              (dec.mode == Decomposition::Mode::exact ? "exact" : "numeric");
  return o;
}

Outcome do_catalecticant(const Request& rq, const std::string& input) {
  const SymmetricForm f = parse_form(input);
  const int d = f.degree();
  const auto [i, j] = rq.split ? *rq.split : std::make_pair(d / 2, d - d / 2);
  const CatalecticantMatrix m = build_catalecticant(f, i, j);
  Outcome o;
  o.doc = header(rq, input);
  o.doc["matrix"] = to_json(m);
  o.text = to_text(m);
  o.summary = input + ": rank M_{" + std::to_string(i) + "," + std::to_string(j) + "} = " + std::to_string(rank_exact(m));
  return o;
}

Outcome do_possible_ranks(const Request& rq) {
  if (rq.n < 1 || rq.d < 1 || rq.b < 1) throw Error(ErrorKind::invalid, "possible-ranks needs -n, -d and -b");
  const auto ranks = possible_ranks(rq.n, rq.d, rq.b);
  Outcome o;
  o.doc = header(rq, "");
  o.doc["n"] = rq.n;
  o.doc["d"] = rq.d;
  o.doc["b"] = rq.b;
  o.doc["possible_ranks"] = ranks;
  std::string set = "{";
  for (size_t k = 0; k < ranks.size(); ++k) set += (k ? ", " : "") + std::to_string(ranks[k]);
  set += "}";
  o.text = set + "\n";
  o.summary = set;
  return o;
}

Outcome do_oracle_verify(const Request& rq, const std::string& input) {
  const SymmetricForm f = parse_form(input, 2);
  int claimed = 0;
  std::string stratum;
  if (f.nvars() == 2) {
    const BinaryRankReport r = ssra(f);
    claimed = r.rank;
    stratum = r.stratum.label();
  } else {
    const GeneralRankReport r = classify_general(f, rq.seed);
    if (!r.rank) throw Error(ErrorKind::not_covered, "no rank claim to verify for this input");
    claimed = *r.rank;
    stratum = r.stratum();
  }
  NumericSearchOptions opts;
  opts.seed = rq.seed;
  opts.tol = rq.tol;
  const auto upper = numeric_rank_upper(f, claimed, opts);
  std::optional<NumericDecomposition> lower;
  if (claimed > 1) lower = numeric_rank_upper(f, claimed - 1, opts);
  Outcome o;
  o.doc = header(rq, input);
  o.doc["stratum"] = stratum;
  o.doc["claimed_rank"] = claimed;
  o.doc["upper_bound_found"] = upper.has_value();
  if (upper) o.doc["numeric"] = to_json(*upper);
  o.doc["smaller_found"] = lower.has_value();
  o.doc["consistent"] = upper.has_value() && !lower.has_value();
  std::ostringstream t;
  t << "claimed rank   " << claimed << " (" << stratum << ")\n"
    << "numeric search " << (upper ? "found " + std::to_string(claimed) + " real terms, residual " +
                                         o.doc["numeric"]["residual"].get<std::string>()
                                   : std::string("found no real decomposition (not a contradiction)"))
    << "\n"
    << "with one less  " << (lower ? "found a decomposition: claim contradicted" : "nothing found") << "\n";
  o.text = t.str();
  o.summary = input + ": rank " + std::to_string(claimed) + (upper ? " confirmed numerically" : " unconfirmed");
  return o;
}

Outcome do_derive_aronhold(const Request& rq) {
  AronholdOptions opts;
  if (rq.seed != 0) opts.seed = rq.seed;
  const AronholdTable t = derive_aronhold(opts);
  Outcome o;
  o.doc = header(rq, "");
  o.doc["samples"] = t.samples;
  o.doc["seed"] = t.seed;
  o.doc["nullity"] = t.nullity;
  o.doc["terms"] = t.terms.size();
  o.doc["table"] = write_aronhold_table(t);
  o.text = write_aronhold_table(t);
  o.summary = std::to_string(t.terms.size()) + " terms, nullity " + std::to_string(t.nullity);
  return o;
}

Outcome single(const Request& rq, const std::string& input) {
  try {
    if (rq.command == "rank" || rq.command == "border-rank") return do_rank(rq, input);
    if (rq.command == "classify") return general_outcome(rq, input, classify_general(parse_form(input), rq.seed));
    if (rq.command == "decompose") return do_decompose(rq, input);
    if (rq.command == "catalecticant") return do_catalecticant(rq, input);
    if (rq.command == "possible-ranks") return do_possible_ranks(rq);
    if (rq.command == "oracle-verify") return do_oracle_verify(rq, input);
    if (rq.command == "derive-aronhold") return do_derive_aronhold(rq);
    throw Error(ErrorKind::invalid, "unknown command '" + rq.command + "'");
  } catch (const Error& e) {
    Outcome o;
    o.doc = header(rq, input);
    o.doc["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    o.text = "error (" + std::string(to_string(e.kind())) + "): " + e.what() + "\n";
    o.summary = input + ": error (" + std::string(to_string(e.kind())) + "): " + e.what();
    o.code = exit_code_for(e.kind());
    return o;
  } catch (const std::exception& e) {
    Outcome o;
    o.doc = header(rq, input);
    o.doc["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
    o.text = std::string("error (internal): ") + e.what() + "\n";
    o.summary = input + ": error (internal): " + e.what();
    o.code = internal;
    return o;
  }
}

bool needs_form(const std::string& cmd) { return cmd != "possible-ranks" && cmd != "derive-aronhold"; }

}  // namespace

std::pair<int, int> parse_split(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    size_t used = 0;
    const int i = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing characters");
    const std::string rest = text.substr(colon + 1);
    const int j = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing characters");
    return {i, j};
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, "split must look like i:j, got '" + text + "'");
  }
}

Response execute(const Request& rq) {
  Response resp;
  if (std::find(commands().begin(), commands().end(), rq.command) == commands().end()) {
    const Outcome o = single(rq, rq.form);
    return {(rq.json ? o.doc.dump() + "\n" : o.text), o.code};
  }
  if (!rq.batch) {
    if (needs_form(rq.command) && rq.form.empty()) {
      Request copy = rq;
      const Outcome o = [&] {
        Outcome e;
        e.doc = header(copy, "");
        e.doc["error"] = Json{{"kind", "parse"}, {"message", "no form given"}};
        e.text = "error (parse): no form given\n";
        e.code = usage;
        return e;
      }();
      return {rq.json ? o.doc.dump() + "\n" : o.text, o.code};
    }
    const Outcome o = single(rq, rq.form);
    return {rq.json ? o.doc.dump(2) + "\n" : o.text, o.code};
  }

  std::ifstream in(*rq.batch);
  if (!in) {
    Outcome o;
    o.doc = header(rq, "");
    o.doc["error"] = Json{{"kind", "invalid"}, {"message", "cannot read batch file " + *rq.batch}};
    return {rq.json ? o.doc.dump() + "\n" : "error (invalid): cannot read batch file " + *rq.batch + "\n", usage};
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Lines are independent; workers fill slots so output order is input order.
  std::vector<Outcome> results(lines.size());
  std::atomic<size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (size_t k; (k = next.fetch_add(1)) < lines.size();) results[k] = single(rq, lines[k]);
    });
  for (auto& t : pool) t.join();
  for (const auto& o : results) {
    resp.output += (rq.json ? o.doc.dump() : o.summary) + "\n";
    resp.exit_code = std::max(resp.exit_code, o.code);
  }
  return resp;
}

int run(int argc, char** argv) {
  CLI::App app{"Symmetric rank, border rank and stratum of symmetric tensors (homogeneous forms)"};
  app.set_version_flag("--version", std::string(SYMRANK_VERSION));
  app.require_subcommand(1);
  Request rq;
  std::string split;
  const std::vector<std::pair<std::string, std::string>> help = {
      {"rank", "symmetric rank with certificate"},
      {"border-rank", "symmetric border rank with certificate"},
      {"decompose", "explicit Waring decomposition (at most two essential variables)"},
      {"classify", "stratum classification in any number of variables"},
      {"catalecticant", "catalecticant matrix, rank and kernel"},
      {"possible-ranks", "ranks allowed by the stratification for (n, d, b)"},
      {"oracle-verify", "check a rank claim with the numeric search"},
      {"derive-aronhold", "re-derive the Aronhold invariant table"}};
  for (const auto& [name, desc] : help) {
    CLI::App* sub = app.add_subcommand(name, desc);
    if (needs_form(name)) sub->add_option("form", rq.form, "polynomial, e.g. \"x^2*y + z^3\"");
    sub->add_flag("--json", rq.json, "emit JSON documents");
    sub->add_option("--seed", rq.seed, "seed for every randomized step");
    sub->add_option("--precision", rq.precision, "root-finding precision in bits (128, 256, 512, 1024)");
    sub->add_option("--tol", rq.tol, "residual tolerance of the numeric search");
    sub->add_option("--split", split, "catalecticant split i:j");
    if (needs_form(name)) sub->add_option("--batch", rq.batch, "file with one form per line");
    sub->add_option("-n", rq.n, "projective dimension (variables - 1)");
    sub->add_option("-d", rq.d, "degree");
    sub->add_option("-b", rq.b, "border rank");
    sub->callback([&rq, name = name] { rq.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }
  if (!split.empty()) {
    try {
      rq.split = parse_split(split);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return usage;
    }
  }
  if (rq.batch && !rq.form.empty()) {
    std::cerr << "give either a form or --batch, not both\n";
    return usage;
  }
  const Response r = execute(rq);
  std::cout << r.output << std::flush;
  return r.exit_code;
}

}  // namespace symrank::cli
