// monoquartic: classify, search, and cross-check quartic trinomials
// x^4 + b x^2 + d.
//
// Exit codes: 0 success, 1 theorem verification failure or oracle
// disagreement, 2 usage error.

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "monoquartic/monoquartic.hpp"

namespace mq = monoquartic;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mq::Integer parse_arg(const std::string& flag, const std::string& text) {
  try {
    return mq::parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + ": expected a decimal integer, got '" + text + "'");
  }
}

mq::Json classify_json(const mq::Trinomial& t) {
  mq::Json j;
  j["trinomial"] = mq::to_json(t);
  j["label"] = mq::to_string(mq::classify_galois(t));
  const mq::MonogenicityReport r = mq::is_monogenic(t);
  j["irreducible"] = r.irreducible;
  j["c4"] = r.c4;
  j["disc"] = mq::to_json(r.disc);
  j["signature"] = r.signature ? mq::to_json(*r.signature) : mq::Json(nullptr);
  j["monogenic"] = r.monogenic;
  j["field_disc"] = r.field_disc ? mq::to_json(*r.field_disc) : mq::Json(nullptr);
  if (const auto* v = r.failing_verdict())
    j["failing_verdict"] = mq::to_json(*v);
  else
    j["failing_verdict"] = nullptr;
  if (r.c4) {
    const auto sc = mq::structural_constraints(t);
    j["structural_constraints"] = {{"d_positive", sc.d_positive},
                                   {"bounds_ok", sc.bounds_ok},
                                   {"d_squarefree", sc.d_squarefree},
                                   {"d_divides_b", sc.d_divides_b},
                                   {"same_radical", sc.same_radical},
                                   {"all_pass", sc.all_pass()}};
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monogenicity and cyclic-quartic tests for x^4 + b x^2 + d"};
  app.require_subcommand(1);

  std::string b_text, d_text;
  auto* classify = app.add_subcommand("classify", "Galois label, discriminant, signature, verdict");
  classify->add_option("--b", b_text, "coefficient of x^2")->required();
  classify->add_option("--d", d_text, "constant term")->required();

  auto* monogenic = app.add_subcommand("monogenic", "Full monogenicity report as one JSON line");
  monogenic->add_option("--b", b_text, "coefficient of x^2")->required();
  monogenic->add_option("--d", d_text, "constant term")->required();
  bool all_primes = false;
  monogenic->add_flag("--all-primes", all_primes, "evaluate every prime, no short-circuit");

  std::string b_min, b_max, d_min, d_max;
  bool c4_only = false, monogenic_only = false;
  std::string format = "json";
  unsigned workers = 1;
  auto* search = app.add_subcommand("search", "Exhaustive search over a (b, d) box");
  search->add_option("--b-min", b_min)->required();
  search->add_option("--b-max", b_max)->required();
  search->add_option("--d-min", d_min)->required();
  search->add_option("--d-max", d_max)->required();
  search->add_flag("--c4-only", c4_only, "keep only cyclic quartics");
  search->add_flag("--monogenic-only", monogenic_only, "keep only monogenic trinomials");
  search->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);

  std::string b_bound, d_bound;
  auto* verify = app.add_subcommand("verify-theorem",
                                    "Check the monogenic C4 set in |b|<=B, 1<=d<=D is the known three");
  verify->add_option("--b-bound", b_bound)->required();
  verify->add_option("--d-bound", d_bound)->required();
  verify->add_option("--workers", workers)->check(CLI::PositiveNumber);

  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::string prime_cap = "97";
  auto* oracle = app.add_subcommand("oracle-check",
                                    "Compare the JKS criterion against Dedekind on random samples");
  oracle->add_option("--samples", samples)->required();
  oracle->add_option("--seed", seed)->required();
  oracle->add_option("--b-bound", b_bound)->required();
  oracle->add_option("--d-bound", d_bound)->required();
  oracle->add_option("--prime-cap", prime_cap, "largest prime compared (default 97)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify->parsed()) {
      const mq::Trinomial t{parse_arg("--b", b_text), parse_arg("--d", d_text)};
      if (t.d == 0) throw UsageError("--d: d = 0 gives a zero discriminant");
      std::cout << classify_json(t).dump() << '\n';
      return 0;
    }

    if (monogenic->parsed()) {
      const mq::Trinomial t{parse_arg("--b", b_text), parse_arg("--d", d_text)};
      if (t.d == 0) throw UsageError("--d: d = 0 gives a zero discriminant");
      mq::ReportOptions opts;
      opts.short_circuit = !all_primes;
      std::cout << mq::to_json(mq::is_monogenic(t, opts)).dump() << '\n';
      return 0;
    }

    if (search->parsed()) {
      const mq::SearchBox box{parse_arg("--b-min", b_min), parse_arg("--b-max", b_max),
                              parse_arg("--d-min", d_min), parse_arg("--d-max", d_max)};
      if (box.empty()) throw UsageError("search: empty box");
      const mq::SearchFilters filters{c4_only, monogenic_only};
      const bool csv = format == "csv";
      if (csv) std::cout << mq::kCsvHeader << '\n';
      mq::search(box, filters, workers, [csv](const mq::SearchItem& item) {
        if (!csv) {
          mq::write_jsonl(std::cout, item);
        } else if (item.ok()) {
          std::cout << mq::csv_row(*item.report) << '\n';
        } else {
          std::cerr << "error at b=" << item.trinomial.b << " d=" << item.trinomial.d << ": "
                    << item.error << '\n';
        }
      });
      return 0;
    }

    if (verify->parsed()) {
      const mq::Integer bb = parse_arg("--b-bound", b_bound);
      const mq::Integer db = parse_arg("--d-bound", d_bound);
      if (bb < 5 || db < 5) throw UsageError("verify-theorem: bounds must be at least 5");
      const auto v = mq::verify_theorem(bb, db, workers);
      mq::Json j;
      j["b_bound"] = mq::to_json(v.b_bound);
      j["d_bound"] = mq::to_json(v.d_bound);
      j["found"] = mq::Json::array();
      for (const auto& t : v.found) j["found"].push_back(mq::to_json(t));
      j["classes"] = mq::Json::array();
      for (const auto& c : v.fields.classes) {
        mq::Json members = mq::Json::array();
        for (auto i : c.members) members.push_back(mq::to_json(v.found[i]));
        j["classes"].push_back({{"field_disc", mq::to_json(c.field_disc)},
                                {"signature", mq::to_json(c.signature)},
                                {"members", std::move(members)}});
      }
      j["undecided"] = mq::Json::array();
      for (auto [a, b] : v.fields.undecided)
        j["undecided"].push_back({mq::to_json(v.found[a]), mq::to_json(v.found[b])});
      j["errors"] = mq::Json::array();
      for (const auto& e : v.errors) j["errors"].push_back(mq::to_json(e));
      j["pass"] = v.pass;
      std::cout << j.dump() << '\n';
      return v.pass ? 0 : kExitFail;
    }

    if (oracle->parsed()) {
      const mq::Integer bb = parse_arg("--b-bound", b_bound);
      const mq::Integer db = parse_arg("--d-bound", d_bound);
      if (bb < 0 || db < 0) throw UsageError("oracle-check: bounds must be nonnegative");
      const auto r = mq::oracle_check(samples, seed, {-bb, bb, -db, db}, parse_arg("--prime-cap", prime_cap));
      mq::Json j;
      j["samples"] = samples;
      j["seed"] = seed;
      j["sampled"] = r.sampled;
      j["agreements"] = r.agreements;
      j["disagreements"] = mq::Json::array();
      for (const auto& d : r.disagreements)
        j["disagreements"].push_back({{"trinomial", mq::to_json(d.trinomial)},
                                      {"prime", mq::to_json(d.prime)},
                                      {"jks", mq::to_json(d.jks)},
                                      {"dedekind", d.dedekind}});
      std::cout << j.dump() << '\n';
      return r.disagreements.empty() ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "monoquartic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "monoquartic: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
