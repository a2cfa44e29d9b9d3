#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mubind/alpha.hpp"
#include "mubind/lambda.hpp"
#include "mubind/nominal.hpp"
#include "mubind/selftest.hpp"
#include "mubind/signature.hpp"
#include "mubind/surface.hpp"
#include "mubind/systemf.hpp"

using namespace mubind;

namespace {

// State shared by one invocation: the chosen language, its signature, and
// the symbol table that interns identifiers in the order the command-line
// arguments are processed.
struct Session {
  std::string lang = "lambda";
  std::string sigFile;
  SymbolTable table;

  const Signature& signature() {
    if (lang == "lambda") return lambdaSignature();
    if (lang == "systemf") return systemFSignature();
    if (sigFile.empty())
      throw std::runtime_error("--lang generic requires --sig FILE");
    if (!loaded_) {
      std::ifstream in(sigFile);
      if (!in)
        throw std::runtime_error("cannot read signature file '" + sigFile +
                                 "'");
      std::ostringstream text;
      text << in.rdbuf();
      loaded_ = parseSignature(text.str());
    }
    return *loaded_;
  }

  Term parseTerm(const std::string& text) {
    if (lang == "lambda") return parseLambda(text, table);
    if (lang == "systemf") return parseSystemF(text, table);
    return parseGenericTerm(signature(), text, table);
  }

  std::string printTerm(const Term& t) {
    if (lang == "lambda") return printLambda(t, table);
    if (lang == "systemf") return printSystemF(t, table);
    return printGenericTerm(signature(), t, table);
  }

 private:
  std::optional<Signature> loaded_;
};

void addCommon(CLI::App* sub, Session& session) {
  sub->add_option("--lang", session.lang, "language: lambda, systemf, generic")
      ->check(CLI::IsMember({"lambda", "systemf", "generic"}));
  sub->add_option("--sig", session.sigFile,
                  "signature file (required for --lang generic)");
}

std::vector<std::string> splitCommas(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Occurrences of object-level variables outside embedded terms, for any
// signature. On the λ-calculus this coincides with varsCount.
std::uint64_t layerVars(const Layer<std::uint64_t>& layer) {
  switch (layer.kind()) {
    case ValKind::Unit:
    case ValKind::Prim:
    case ValKind::Emb:
      return 0;
    case ValKind::Rec:
      return layer.value();
    case ValKind::InL:
    case ValKind::InR:
      return layerVars(layer.inner());
    case ValKind::Pair:
      return layerVars(layer.first()) + layerVars(layer.second());
    case ValKind::Var:
      return 1;
    case ValKind::Bind:
      return layerVars(layer.scope());
  }
  return 0;
}

Term substTerm(Session& session, const Term& m, const Name& x, const Term& n,
               bool naive) {
  if (session.lang == "lambda")
    return naive ? lambda::substNaive(m, x, n) : lambda::subst(m, x, n);
  if (session.lang == "systemf")
    return naive ? systemf::substTermNaive(m, x, n)
                 : systemf::substTerm(m, x, n);
  throw std::runtime_error("subst supports --lang lambda and systemf only");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Nominal syntax over a universe of datatypes with binders: generic "
      "fold, swapping, alpha-equivalence, freshening, and capture-avoiding "
      "substitution for the lambda-calculus and System F.",
      "mubind"};
  app.require_subcommand(1);

  Session session;
  int rc = 0;

  std::string termText, otherText, substVar, swapSort, swapA, swapB, avoidList;
  bool naive = false;
  int fuel = 1000;
  selftest::SuiteOptions suiteOpt;

  CLI::App* parse = app.add_subcommand(
      "parse", "parse a term and print its generic representation");
  addCommon(parse, session);
  parse->add_option("term", termText)->required();
  parse->callback([&] {
    Term t = session.parseTerm(termText);
    std::cout << printGenericTerm(session.signature(), t, session.table)
              << "\n";
  });

  CLI::App* print =
      app.add_subcommand("print", "parse a term and re-render it");
  addCommon(print, session);
  print->add_option("term", termText)->required();
  print->callback(
      [&] { std::cout << session.printTerm(session.parseTerm(termText)) << "\n"; });

  CLI::App* fvCmd =
      app.add_subcommand("fv", "free variables, one (sort,name) per line");
  addCommon(fvCmd, session);
  fvCmd->add_option("term", termText)->required();
  fvCmd->callback([&] {
    Term t = session.parseTerm(termText);
    for (const SortedName& sn : fv(t))
      std::cout << "(" << session.signature().sortName(sn.sort) << ","
                << session.table.render(sn.name) << ")\n";
  });

  CLI::App* bindersCmd =
      app.add_subcommand("binders", "binder names in pre-order, one per line");
  addCommon(bindersCmd, session);
  bindersCmd->add_option("term", termText)->required();
  bindersCmd->callback([&] {
    for (const Name& name : bindersOf(session.parseTerm(termText)))
      std::cout << session.table.render(name) << "\n";
  });

  CLI::App* alphaeq = app.add_subcommand(
      "alphaeq", "alpha-equivalence; exit 0 when equivalent, 1 when not");
  addCommon(alphaeq, session);
  alphaeq->add_option("left", termText)->required();
  alphaeq->add_option("right", otherText)->required();
  alphaeq->callback([&] {
    Term a = session.parseTerm(termText);
    Term b = session.parseTerm(otherText);
    bool eq = alphaEq(a, b);
    std::cout << (eq ? "true" : "false") << "\n";
    rc = eq ? 0 : 1;
  });

  CLI::App* swapCmd =
      app.add_subcommand("swap", "swap two names of a sort everywhere");
  addCommon(swapCmd, session);
  swapCmd->add_option("--sort", swapSort, "sort of the names")->required();
  swapCmd->add_option("a", swapA)->required();
  swapCmd->add_option("b", swapB)->required();
  swapCmd->add_option("term", termText)->required();
  swapCmd->callback([&] {
    std::optional<Sort> sort = session.signature().sortByName(swapSort);
    if (!sort) throw std::runtime_error("unknown sort '" + swapSort + "'");
    Name a = session.table.intern(swapA);
    Name b = session.table.intern(swapB);
    Term t = session.parseTerm(termText);
    std::cout << session.printTerm(swap(*sort, a, b, t)) << "\n";
  });

  CLI::App* freshen = app.add_subcommand(
      "freshen", "rename binders canonically away from the avoided names");
  addCommon(freshen, session);
  freshen->add_option("--avoid", avoidList, "comma-separated names to avoid");
  freshen->add_option("term", termText)->required();
  freshen->callback([&] {
    std::vector<Name> avoid;
    for (const std::string& token : splitCommas(avoidList))
      avoid.push_back(session.table.intern(token));
    Term t = session.parseTerm(termText);
    std::cout << session.printTerm(bindersFreeElem(avoid, t)) << "\n";
  });

  CLI::App* canon =
      app.add_subcommand("canon", "print the canonical (nameless-binder) form");
  addCommon(canon, session);
  canon->add_option("term", termText)->required();
  canon->callback([&] {
    Term t = session.parseTerm(termText);
    std::cout << printCanonical(session.signature(), toCanonical(t),
                                session.table)
              << "\n";
  });

  CLI::App* subst =
      app.add_subcommand("subst", "substitute a term for a free variable");
  addCommon(subst, session);
  subst->add_flag("--naive", naive, "substitute without renaming binders");
  subst->add_option("term", termText)->required();
  subst->add_option("var", substVar)->required();
  subst->add_option("replacement", otherText)->required();
  subst->callback([&] {
    Term m = session.parseTerm(termText);
    Name x = session.table.intern(substVar);
    Term n = session.parseTerm(otherText);
    std::cout << session.printTerm(substTerm(session, m, x, n, naive)) << "\n";
  });

  CLI::App* vars = app.add_subcommand(
      "vars", "count variable occurrences outside embedded terms");
  addCommon(vars, session);
  vars->add_option("term", termText)->required();
  vars->callback([&] {
    Term t = session.parseTerm(termText);
    Algebra<std::uint64_t> alg = layerVars;
    std::cout << fold<std::uint64_t>(session.signature().entry(), alg, t)
              << "\n";
  });

  CLI::App* normalize =
      app.add_subcommand("normalize", "beta-normalize a lambda term");
  addCommon(normalize, session);
  normalize->add_option("--fuel", fuel, "maximum number of beta steps");
  normalize->add_option("term", termText)->required();
  normalize->callback([&] {
    if (session.lang != "lambda")
      throw std::runtime_error("normalize supports --lang lambda only");
    Term t = session.parseTerm(termText);
    std::optional<Term> result = lambda::normalize(t, fuel);
    if (result) {
      std::cout << session.printTerm(*result) << "\n";
    } else {
      std::cout << "fuel exhausted\n";
      rc = 1;
    }
  });

  CLI::App* selftestCmd =
      app.add_subcommand("selftest", "run the property suites");
  selftestCmd->add_option("--seed", suiteOpt.seed, "random seed");
  selftestCmd->add_option("--count", suiteOpt.count, "cases per property");
  selftestCmd->add_option("--size", suiteOpt.maxNodes,
                          "layer budget per random term");
  selftestCmd->callback([&] {
    bool all = true;
    for (const selftest::SuiteResult& r : selftest::runSuites(suiteOpt)) {
      std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name << "  ["
                << r.detail << "]\n";
      all = all && r.passed;
    }
    std::cout << (all ? "all suites passed" : "suite failures") << "\n";
    rc = all ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
