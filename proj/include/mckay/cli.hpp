#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mckay/mckay_graph.hpp"
#include "mckay/verify.hpp"

namespace mckay {

struct GraphDocumentOptions {
  bool components = false;
};

std::string graph_to_dot(const McKayGraph& g, const GraphDocumentOptions& options = {});
std::string graph_to_json(const McKayGraph& g, const std::string& spec, const std::string& selector,
                          const GraphDocumentOptions& options = {});
std::string table_to_json(const CharacterTable& ct, const std::string& spec);
std::string report_to_json(const VerificationReport& report, bool timings = false);
std::string report_to_text(const VerificationReport& report, bool timings = false);

/// Exit codes: 0 success, 1 a verification check failed, 2 usage, parse or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mckay
