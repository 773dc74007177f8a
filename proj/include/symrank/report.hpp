#pragma once

#include "symrank/catalecticant.hpp"
#include "symrank/oracle.hpp"
#include "symrank/strata.hpp"
#include "symrank/sylvester.hpp"

#include <json.hpp>

#include <string>

namespace symrank {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symrank/1";

Json to_json(const BinaryRankReport& r);
Json to_json(const GeneralRankReport& r);
Json to_json(const Decomposition& d);
Json to_json(const CatalecticantMatrix& m);
Json to_json(const NumericDecomposition& d);
Json to_json(const LinearChange& c);

std::string to_text(const BinaryRankReport& r);
std::string to_text(const GeneralRankReport& r);
std::string to_text(const Decomposition& d);
std::string to_text(const CatalecticantMatrix& m);

/// Decimal rendering with the given number of significant digits.
std::string format_real(const WideReal& x, int digits);

struct VerifyResult {
  bool ok = true;
  std::string message;
};

/// Re-checks the certificate of a report document produced for `f` using
/// only the data in the document and independent recomputation.
VerifyResult verify_document(const Json& doc, const SymmetricForm& f);

}  // namespace symrank
