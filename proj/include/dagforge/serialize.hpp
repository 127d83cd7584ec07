#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dagforge/dag.hpp"

namespace dagforge {

enum class OutputFormat { edgelist, matrix, dot, json };

OutputFormat parse_format(std::string_view name);
std::string format_name(OutputFormat f);

// One record in the chosen format; a blank line terminates each record so
// multi-DAG streams stay self-delimiting. Vertices are 1-indexed in every
// text format.
void write_dag(std::ostream& os, const Dag& d, OutputFormat f);

// Streaming reader for the formats write_dag emits.
class DagReader {
 public:
  DagReader(std::istream& is, OutputFormat f) : is_(is), format_(f) {}

  // false at clean end of stream; throws on malformed input
  bool next(Dag& out);

 private:
  std::istream& is_;
  OutputFormat format_;
};

}  // namespace dagforge
