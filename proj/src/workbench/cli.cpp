#include "etale/workbench/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>

#include "CLI11.hpp"

#include "etale/workbench/checks.hpp"
#include "etale/workbench/corpus.hpp"

namespace etale::workbench {

namespace {

const std::set<std::string> kCommands = {"validate", "omega", "cpoints", "roundtrip",
                                         "crm",      "adjoint", "corpus"};
const std::set<std::string> kValuedOptions = {"--max-arrows", "--max-elements", "--format",
                                              "--seed", "--jobs"};

// The first token that is neither an option nor an option's value.
std::string first_command(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.rfind("-", 0) == 0) {
      if (kValuedOptions.count(a)) ++i;
      continue;
    }
    return a;
  }
  return {};
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json_format = false;

  int emit(const std::string& command, std::vector<CheckReport> reports) {
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& r : reports) {
      if (r.status == Status::pass) ++passed;
      else if (r.status == Status::fail) ++failed;
      else ++skipped;
    }
    if (json_format) {
      json list = json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      json summary = {{"command", command},
                      {"reports", list},
                      {"summary",
                       {{"total", reports.size()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
                      {"status", failed ? "fail" : "pass"}};
      out << summary.dump(2) << '\n';
    } else {
      for (const auto& r : reports) out << format_text(r) << '\n';
      out << reports.size() << " checks: " << passed << " passed, " << failed << " failed, " << skipped
          << " skipped\n";
    }
    return failed ? kExitCheckFailed : kExitPass;
  }
};

void write_or_print(const Document& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) out << serialize(doc);
  else save_document(doc, path);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const std::string command = first_command(args);
  if (!command.empty() && !kCommands.count(command)) {
    err << "error: unknown command '" << command << "'\n";
    return kExitUnknownCommand;
  }

  CLI::App app{"Workbench for étale categories, quantal frames and restriction monoids", "workbench"};
  app.fallthrough();
  app.require_subcommand(1);
  Limits limits;
  std::string format = "text";
  unsigned jobs = 1;
  app.add_option("--max-arrows", limits.max_arrows, "Largest category accepted")->capture_default_str();
  app.add_option("--max-elements", limits.max_elements, "Largest quantal frame or monoid accepted")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", limits.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads for corpus run")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::string file, second, out_path, corpus_dir, generate_dir;
  auto* validate = app.add_subcommand("validate", "Layered axiom checks of one document");
  validate->add_option("file", file)->required();
  auto* omega = app.add_subcommand("omega", "Emit the quantal frame of open sets of a category");
  omega->add_option("file", file)->required();
  omega->add_option("-o,--out", out_path, "Write the result here instead of stdout");
  auto* cpoints = app.add_subcommand("cpoints", "Emit the category of completely prime filters");
  cpoints->add_option("file", file)->required();
  cpoints->add_option("-o,--out", out_path, "Write the result here instead of stdout");
  auto* roundtrip = app.add_subcommand("roundtrip", "Check that χ and ω are isomorphisms");
  roundtrip->add_option("file", file)->required();
  auto* crm = app.add_subcommand("crm", "Round trips between quantal frames and restriction monoids");
  crm->add_option("file", file)->required();
  auto* adjoint = app.add_subcommand("adjoint", "Verify the hom-set bijection for a category and a target");
  adjoint->add_option("category", file)->required();
  adjoint->add_option("target", second)->required();
  auto* corpus = app.add_subcommand("corpus", "Run or write the built-in corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Run every corpus check");
  corpus_run->add_option("--dir", corpus_dir, "Corpus directory (default: $WORKBENCH_CORPUS_DIR, else built in)");
  auto* corpus_generate = corpus->add_subcommand("generate", "Write the built-in corpus as files");
  corpus_generate->add_option("--out", generate_dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  Output output{out, err, format == "json"};
  try {
    if (*validate) return output.emit("validate", validate_checks(load_document(file), limits));
    if (*omega || *cpoints) {
      const Document doc = load_document(file);
      const Emitted e = *omega ? omega_command(doc, limits) : cpoints_command(doc, limits);
      if (out_path.empty()) {
        write_or_print(e.document, out_path, out);
        Output side{err, err, output.json_format};
        return side.emit(*omega ? "omega" : "cpoints", e.checks);
      }
      write_or_print(e.document, out_path, out);
      return output.emit(*omega ? "omega" : "cpoints", e.checks);
    }
    if (*roundtrip) return output.emit("roundtrip", roundtrip_checks(load_document(file), limits));
    if (*crm) return output.emit("crm", crm_checks(load_document(file), limits));
    if (*adjoint)
      return output.emit("adjoint", adjoint_checks(load_document(file), load_document(second), limits));
    if (*corpus_generate) {
      const auto docs = generate_corpus();
      write_corpus(docs, generate_dir);
      out << "wrote " << docs.size() << " documents to " << generate_dir << '\n';
      return kExitPass;
    }
    if (*corpus_run) {
      if (corpus_dir.empty())
        if (const char* env = std::getenv("WORKBENCH_CORPUS_DIR")) corpus_dir = env;
      const auto docs = corpus_dir.empty() ? generate_corpus() : load_corpus(corpus_dir);
      auto progress = [&err](const CheckReport& r) {
        err << std::fixed << std::setprecision(1) << '[' << r.millis << " ms] " << format_text(r) << '\n';
      };
      return output.emit("corpus run", run_corpus(docs, limits, jobs, progress));
    }
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitBoundExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  err << "error: no command given\n";
  return kExitInputError;
}

}  // namespace etale::workbench
