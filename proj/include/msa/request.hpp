#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "msa/path_algebra.hpp"
#include "msa/quiver.hpp"
#include "msa/scalar.hpp"

namespace msa {

inline constexpr const char* kSchemaVersion = "msa-atlas/1";

struct ArrowInput {
  std::string name;
  std::string source;
  std::string target;
  friend bool operator==(const ArrowInput&, const ArrowInput&) = default;
};

struct TermInput {
  Scalar coeff;
  std::vector<std::string> path;  // arrow names, composed left to right
  friend bool operator==(const TermInput&, const TermInput&) = default;
};

struct GeneratorInput {
  std::vector<TermInput> terms;
  std::optional<std::array<std::string, 3>> type;  // declared (u,v,w) for zero generators
  friend bool operator==(const GeneratorInput&, const GeneratorInput&) = default;
};

struct RequestOptions {
  std::optional<std::string> basepoint;  // nullopt = auto
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::vector<std::uint32_t> oracle_chars{2, 3};
  std::size_t degree_cap = kDefaultDegreeCap;
  friend bool operator==(const RequestOptions&, const RequestOptions&) = default;
};

struct AnalysisRequest {
  std::vector<std::string> vertices;
  std::vector<ArrowInput> arrows;
  std::optional<std::vector<GeneratorInput>> ideal;
  RequestOptions options;
  friend bool operator==(const AnalysisRequest&, const AnalysisRequest&) = default;
};

/// JSON when the first non-blank character is '{', the text DSL otherwise.
/// Throws ParseError naming the offending line or field.
AnalysisRequest parse_request(std::string_view text);
AnalysisRequest parse_json_request(std::string_view text);
AnalysisRequest parse_dsl_request(std::string_view text);

nlohmann::ordered_json to_json(const AnalysisRequest& request);

/// The request after basepoint selection and arrow sorting, plus the quiver
/// and ideal it denotes.
struct NormalizedInput {
  AnalysisRequest request;                // vertices and arrows in internal order
  Quiver quiver;
  std::optional<IdealSpec> ideal;
  std::vector<std::size_t> vertex_order;  // internal index -> input position
  std::vector<std::size_t> arrow_order;   // internal position -> input position
  std::vector<std::string> warnings;
};

/// Picks the basepoint (the requested label, else the first vertex without a
/// loop), moves it to the front, and stable-sorts arrows into blocks.
/// Throws ParseError for duplicate or dangling labels and bad paths.
NormalizedInput normalize(const AnalysisRequest& request);

}  // namespace msa
