#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seifert/cli/batch.hpp"
#include "seifert/cli/io.hpp"

namespace seifert::cli {

enum class Format { Json, Table, Csv };

Format parse_format(const std::string& name);

// Exit codes: 0 on success, 1 when an identity check fails (verify and
// batch-verify), 2 for invalid input, 3 for internal assertion failures.
// The functions below return the code; main maps exceptions to 2 and 3.

int run_normalize(const SeifertData& s, Format format, std::ostream& out);
int run_invariants(const SeifertData& s, Format format, std::ostream& out);
int run_torsion(const SeifertData& s, const std::optional<std::vector<Int>>& spinc_word,
                bool all, Format format, std::ostream& out);
int run_plumbing(const SeifertData& s, std::ostream& out);
int run_poincare(const SeifertData& s, long terms, Format format, std::ostream& out);
int run_verify(const SeifertData& s, Format format, std::ostream& out);
int run_conjecture(const SeifertData& s, const Rat& pg, Format format, std::ostream& out);
int run_batch_verify(const BatchParams& params, Format format, std::ostream& out);

}  // namespace seifert::cli
