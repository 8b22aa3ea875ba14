// Command line front end: classify a quadrilateral, unfold and render a word,
// check or search for periodic words, run the sampling verifiers, solve the
// ladder threshold equation. JSON on stdout with --json; exit codes: 0 ok,
// 1 not periodic or failures found, 2 usage or input errors, 3 unfold closure
// failure (the SVG is still written).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qb/io.hpp"
#include "qb/svg.hpp"

namespace {

struct UsageError : std::runtime_error {
  qb::Json body;
  UsageError(const std::string& msg, qb::Json b) : std::runtime_error(msg), body(std::move(b)) {}
};

std::string readInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input", qb::errorBody("cannot open input: " + path));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

qb::QuadInput loadInput(const std::string& path) {
  try {
    return qb::parseQuadDocument(readInput(path));
  } catch (const qb::ParseError& e) {
    throw UsageError(e.what(), qb::errorBody(e.what(), e.field));
  }
}

qb::QuadParams requireQuad(const qb::QuadInput& in, const char* cmd) {
  if (!in.quad)
    throw UsageError("needs a quadrilateral",
                     qb::errorBody(std::string(cmd) + " needs a quadrilateral input"));
  return *in.quad;
}

qb::OrbitWord parseWord(const std::string& text) {
  try {
    return qb::OrbitWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what(), qb::errorBody(e.what(), "word"));
  }
}

void emit(const qb::Json& body, bool json, const std::string& fallback) {
  if (json)
    std::cout << body.dump(2) << "\n";
  else
    std::cout << fallback << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periodic billiard paths in near-square quadrilaterals"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output");

  std::string input = "-";
  std::string wordText;
  std::string svgPath;
  bool noRelabel = false;
  bool stableOnly = false;
  int maxLen = 8;
  int nIndex = 3;
  double eps = qb::kPi / 107.0;
  double aspect = 1.0;
  long long samples = -1;
  std::uint64_t seed = 42;

  CLI::App* cClassify = app.add_subcommand("classify", "region and orbit word of a quadrilateral");
  cClassify->add_option("input", input, "JSON document path, or - for stdin");

  CLI::App* cUnfold = app.add_subcommand("unfold", "reflect along a word and render the chain");
  cUnfold->add_option("input", input, "JSON document path, or - for stdin");
  cUnfold->add_option("--word", wordText, "bounce word, decimal digits")->required();
  cUnfold->add_option("--svg", svgPath, "write an SVG picture here");

  CLI::App* cCheck = app.add_subcommand("check", "verify a periodic word on an input polygon");
  cCheck->add_option("input", input, "JSON document path, or - for stdin");
  cCheck->add_option("--word", wordText, "bounce word, decimal digits")->required();
  cCheck->add_flag("--no-relabel", noRelabel, "take edge labels literally");

  CLI::App* cSearch = app.add_subcommand("search", "enumerate accepted words up to a length");
  cSearch->add_option("input", input, "JSON document path, or - for stdin");
  cSearch->add_option("--max-len", maxLen, "even word length bound, 2..20");
  cSearch->add_flag("--stable-only", stableOnly, "skip words failing the parity balance");

  CLI::App* cCover = app.add_subcommand("verify-cover", "sample the near-square ball and verify");
  cCover->add_option("--eps", eps, "chart half-width (default pi/107)");
  cCover->add_option("--samples", samples, "sample count (default 10000)");
  cCover->add_option("--seed", seed, "RNG seed");

  CLI::App* cBound = app.add_subcommand("verify-boundaries",
                                        "exact samples on the measure-zero sets");
  cBound->add_option("--eps", eps, "chart half-width (default pi/107)");
  cBound->add_option("--samples", samples, "samples per set (default 1000)");
  cBound->add_option("--seed", seed, "RNG seed");

  CLI::App* cRect = app.add_subcommand("verify-near-rect", "sample around a non-square rectangle");
  cRect->add_option("--aspect", aspect, "rectangle aspect ratio, at least 1");
  cRect->add_option("--eps", eps, "chart half-width (default pi/107)");
  cRect->add_option("--samples", samples, "sample count (default 10000)");
  cRect->add_option("--seed", seed, "RNG seed");

  CLI::App* cEps = app.add_subcommand("epsilon", "least positive root of the ladder threshold");
  cEps->add_option("--n", nIndex, "ladder index, at least 2");

  // let --json after a subcommand reach the top-level flag
  for (CLI::App* sub : {cClassify, cUnfold, cCheck, cSearch, cCover, cBound, cRect, cEps})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cClassify->parsed()) {
      qb::QuadParams q = requireQuad(loadInput(input), "classify");
      qb::Json body = qb::classifyReport(q);
      emit(body, json,
           "region " + body["region"].get<std::string>() + "  word " +
               body["orbitWord"].get<std::string>() + "  alpha " +
               std::to_string(body["alpha"].get<double>()) + "  beta " +
               std::to_string(body["beta"].get<double>()));
      return 0;
    }

    if (cUnfold->parsed()) {
      qb::QuadInput in = loadInput(input);
      qb::OrbitWord word = parseWord(wordText);
      qb::ConvexPolygon poly = in.polygon();
      std::optional<qb::Unfolding> u;
      try {
        u = qb::unfold(poly, word);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), qb::errorBody(e.what(), "word"));
      }
      std::optional<qb::CorridorResult> corr;
      if (qb::closureTranslation(*u)) corr = qb::corridor(*u);
      if (!svgPath.empty()) {
        std::ofstream f(svgPath);
        if (!f) throw UsageError("cannot write SVG", qb::errorBody("cannot write: " + svgPath));
        f << qb::renderUnfoldingSvg(*u, corr ? &*corr : nullptr);
      }
      qb::Json body = qb::unfoldReport(*u, corr);
      emit(body, json,
           "polygons " + std::to_string(u->polygons.size()) +
               (corr ? "  closure yes  width " + std::to_string(corr->width)
                     : "  closure no"));
      return corr ? 0 : 3;
    }

    if (cCheck->parsed()) {
      qb::QuadInput in = loadInput(input);
      qb::OrbitWord word = parseWord(wordText);
      qb::PeriodicityVerdict v;
      try {
        v = qb::isPeriodic(in.polygon(), word, !noRelabel);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), qb::errorBody(e.what(), "word"));
      }
      qb::Json body = qb::checkReport(v, word);
      emit(body, json,
           std::string(v.accepted ? "periodic" : "not periodic") +
               (v.accepted ? "  width " + std::to_string(v.corridor->width)
                           : "  (" + v.reason + ")"));
      return v.accepted ? 0 : 1;
    }

    if (cSearch->parsed()) {
      qb::QuadParams q = requireQuad(loadInput(input), "search");
      qb::SearchReport rep;
      try {
        rep = qb::searchWords(q, maxLen, stableOnly);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), qb::errorBody(e.what(), "max-len"));
      }
      std::string brief = "accepted " + std::to_string(rep.accepted.size()) + " of " +
                          std::to_string(rep.candidates) + " candidates:";
      for (const qb::AcceptedWord& aw : rep.accepted) brief += " " + aw.word.str();
      emit(qb::searchReportJson(rep), json, brief);
      return 0;
    }

    auto runCover = [&](const char* mode, auto&& fn, long long defSamples) {
      long long n = samples < 0 ? defSamples : samples;
      qb::CoverReport rep;
      try {
        rep = fn(n);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), qb::errorBody(e.what(), "eps"));
      }
      emit(qb::coverReportJson(rep, mode), json,
           std::string(mode) + ": " + std::to_string(rep.failures.size()) +
               " failures in " + std::to_string(rep.samples) + " samples");
      return rep.allVerified() ? 0 : 1;
    };

    if (cCover->parsed())
      return runCover("cover", [&](long long n) {
        return qb::verifyCover(qb::Angle::radians(eps), n, seed);
      }, 10000);
    if (cBound->parsed())
      return runCover("boundaries", [&](long long n) {
        return qb::verifyBoundaries(qb::Angle::radians(eps), n, seed);
      }, 1000);
    if (cRect->parsed())
      return runCover("near-rect", [&](long long n) {
        return qb::verifyNearRectangle(aspect, qb::Angle::radians(eps), n, seed);
      }, 10000);

    if (cEps->parsed()) {
      qb::Json body;
      try {
        body = qb::epsilonReport(nIndex);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what(), qb::errorBody(e.what(), "n"));
      } catch (const qb::SolverError& e) {
        std::cout << qb::errorBody(e.what()).dump(2) << "\n";
        return 1;
      }
      emit(body, json,
           "epsilon_" + std::to_string(nIndex) + " = " +
               std::to_string(body["value"].get<double>()));
      return 0;
    }
  } catch (const UsageError& e) {
    std::cout << e.body.dump(2) << "\n";
    return 2;
  }
  return 2;
}
