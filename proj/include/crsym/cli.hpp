#ifndef CRSYM_CLI_HPP
#define CRSYM_CLI_HPP

#include "crsym/corpus.hpp"
#include "crsym/report.hpp"

namespace crsym {

/// Exit codes of the command-line tool.
enum ExitCode {
    kExitOk = 0,
    kExitInvalidModel = 1,
    kExitParseError = 2,
    kExitNoRotation = 3,
    kExitInternal = 4,
};

int exit_code_for(Errc c);

/// The commands operate on model file text; the binary adds file I/O.
Report cmd_check(const std::string& text, const std::string& source);
Report cmd_aut(const std::string& text, const std::string& source);
Report cmd_chains(const std::string& text, const std::string& source);
Report cmd_embed(const std::string& text, const std::string& source);
Report cmd_classify(const std::string& text, const std::string& source);

/// Writes `count` model files under out_dir (corpus_0000.crm, ...) and
/// returns the verification summary.  Deterministic per seed.
Report cmd_corpus(uint64_t seed, uint64_t count, CorpusFamily family,
                  const std::string& out_dir);

} // namespace crsym

#endif
