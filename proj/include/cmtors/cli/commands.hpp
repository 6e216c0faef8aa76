#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cmtors/cli/records.hpp"

namespace cmtors {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitSingular = 2,
    kExitParse = 3,
    kExitFactorization = 4,
    kExitNotCM = 5,
};

enum class Engine { Classifier, Oracle };

struct RunOptions {
    GroupFormat format = GroupFormat::Json;
    unsigned jobs = 1;
    std::optional<mpz_class> d;  // report only Q(sqrt d)
};

// Reads JSONL curve records from `in` and writes one report per record to
// `out`, in input order. Diagnostics go to `err`. Returns an ExitCode.
int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const RunOptions& opts,
                 Engine engine = Engine::Classifier);

struct CompareOptions {
    std::vector<int> cms;
    long bound = 1;
    unsigned jobs = 1;
    GroupFormat format = GroupFormat::Json;
};

// Differential run of both engines over every canonical twist with |k| <= bound.
// Emits one line per mismatch and a final summary line.
int cmd_compare(std::ostream& out, std::ostream& err, const CompareOptions& opts);

// Text rendering of the torsion and growth tables from the classifier rows.
void cmd_tables(std::ostream& out);

} // namespace cmtors
