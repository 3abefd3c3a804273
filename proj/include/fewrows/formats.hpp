// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_FORMATS_HPP
#define FEWROWS_FORMATS_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "fewrows/core.hpp"
#include "fewrows/problems.hpp"
#include "fewrows/trace.hpp"

namespace fewrows {

// Parse failure with a 1-based position.  `line`/`col` point at the offending
// token (or at the end of input when something is missing).
struct FormatError : std::runtime_error {
  int line;
  int col;

  FormatError(int line_, int col_, const std::string& message);
};

enum class DocKind { Ilp, Bilp, CString, Disc, SetSys, NFold, Sol, Trace };

// One parsed document.  Exactly the member matching `kind` is engaged.
struct Document {
  DocKind kind = DocKind::Ilp;
  std::optional<IlpInstance> ilp;
  std::optional<BinaryIlpInstance> bilp;
  std::optional<ClosestStringInstance> cstring;
  std::optional<DiscrepancyInstance> disc;
  std::optional<SetSystemInstance> setsys;
  std::optional<NFoldInstance> nfold;
  std::optional<Assignment> sol;
  std::optional<ReductionTrace> trace;
};

// Parses any supported document, dispatching on the header tag.  Throws
// FormatError on malformed input.  `#` starts a comment that runs to the end
// of the line; blank lines are ignored; tokens are whitespace-separated.
Document parse(const std::string& text);

// Canonical text forms: fixed section order, single spaces, LF line endings,
// no trailing whitespace.  parse(serialize(x)) reproduces x, and
// serialize(parse(t)) == t for canonical t.
std::string serialize(const IlpInstance& inst);
std::string serialize(const BinaryIlpInstance& inst);
std::string serialize(const ClosestStringInstance& inst);
std::string serialize(const DiscrepancyInstance& inst);
std::string serialize(const SetSystemInstance& inst);
std::string serialize(const NFoldInstance& inst);
std::string serialize(const Assignment& sol);
std::string serialize(const ReductionTrace& trace);
std::string serialize(const Document& doc);

// Reads a whole file; throws std::runtime_error naming the path on failure.
std::string read_file(const std::string& path);

// Writes text to a file; throws std::runtime_error naming the path on failure.
void write_file(const std::string& path, const std::string& text);

}  // namespace fewrows

#endif  // FEWROWS_FORMATS_HPP
