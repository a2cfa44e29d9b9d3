#include "mubind/signature.hpp"

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "mubind/lambda.hpp"
#include "mubind/sexpr.hpp"
#include "mubind/systemf.hpp"

namespace mubind {

Signature::Signature(std::vector<std::string> sortNames,
                     std::vector<std::pair<std::string, Code>> codes,
                     std::string entryName)
    : sortNames_(std::move(sortNames)),
      codes_(std::move(codes)),
      entryName_(std::move(entryName)) {
  if (codeByName(entryName_) == nullptr)
    throw std::invalid_argument("signature entry '" + entryName_ +
                                "' is not a declared code");
}

const Code& Signature::entry() const {
  const Code* code = codeByName(entryName_);
  assert(code != nullptr);
  return *code;
}

std::optional<Sort> Signature::sortByName(const std::string& name) const {
  for (std::size_t i = 0; i < sortNames_.size(); ++i)
    if (sortNames_[i] == name) return Sort(static_cast<std::uint32_t>(i));
  return std::nullopt;
}

const std::string& Signature::sortName(Sort sort) const {
  assert(sort.id() < sortNames_.size());
  return sortNames_[sort.id()];
}

const Code* Signature::codeByName(const std::string& name) const {
  for (const auto& [codeName, code] : codes_)
    if (codeName == name) return &code;
  return nullptr;
}

namespace {

struct SignatureBuilder {
  std::vector<std::string> sortNames;
  std::vector<std::string> codeOrder;
  std::map<std::string, const Sexpr*> pending;
  std::map<std::string, Code> resolved;
  std::set<std::string> inProgress;

  Sort sortFor(const Sexpr& atom) {
    for (std::size_t i = 0; i < sortNames.size(); ++i)
      if (sortNames[i] == atom.text)
        return Sort(static_cast<std::uint32_t>(i));
    throw ParseError("unknown sort '" + atom.text + "'", atom.line, atom.col);
  }

  const Sexpr& arg(const Sexpr& list, std::size_t index) {
    if (list.items.size() <= index)
      throw ParseError("too few arguments in code expression", list.line,
                       list.col);
    return list.items[index];
  }

  const Sexpr& atomArg(const Sexpr& list, std::size_t index) {
    const Sexpr& a = arg(list, index);
    if (a.kind != Sexpr::Kind::Atom)
      throw ParseError("expected a name", a.line, a.col);
    return a;
  }

  Code resolveCode(const std::string& name, const Sexpr& site) {
    auto done = resolved.find(name);
    if (done != resolved.end()) return done->second;
    auto form = pending.find(name);
    if (form == pending.end())
      throw ParseError("unknown code '" + name + "'", site.line, site.col);
    if (!inProgress.insert(name).second)
      throw ParseError("embedding cycle at code '" + name + "'", site.line,
                       site.col);
    Code code = resolveExpr(*form->second);
    inProgress.erase(name);
    resolved.emplace(name, code);
    return code;
  }

  Code resolveExpr(const Sexpr& expr) {
    if (expr.kind == Sexpr::Kind::Atom) {
      if (expr.text == "unit") return Code::unit();
      if (expr.text == "rec") return Code::rec();
      throw ParseError("unknown code expression '" + expr.text + "'",
                       expr.line, expr.col);
    }
    if (expr.kind != Sexpr::Kind::List || expr.items.empty() ||
        expr.items[0].kind != Sexpr::Kind::Atom)
      throw ParseError("expected a code expression", expr.line, expr.col);
    const std::string& head = expr.items[0].text;
    if (head == "prim") {
      const Sexpr& tag = atomArg(expr, 1);
      if (tag.text == "nat") return Code::prim(PrimKind::Nat);
      if (tag.text == "text") return Code::prim(PrimKind::Text);
      if (tag.text == "bool") return Code::prim(PrimKind::Bool);
      throw ParseError("unknown payload kind '" + tag.text + "'", tag.line,
                       tag.col);
    }
    if (head == "emb") {
      const Sexpr& name = atomArg(expr, 1);
      return Code::emb(resolveCode(name.text, name));
    }
    if (head == "sum")
      return Code::sum(resolveExpr(arg(expr, 1)), resolveExpr(arg(expr, 2)));
    if (head == "prod")
      return Code::prod(resolveExpr(arg(expr, 1)), resolveExpr(arg(expr, 2)));
    if (head == "var") return Code::var(sortFor(atomArg(expr, 1)));
    if (head == "bind")
      return Code::bind(sortFor(atomArg(expr, 1)), resolveExpr(arg(expr, 2)));
    throw ParseError("unknown code expression '" + head + "'", expr.line,
                     expr.col);
  }
};

}  // namespace

Signature parseSignature(const std::string& text) {
  SignatureBuilder builder;
  std::string entryName;
  bool haveEntry = false;
  int entryLine = 1;
  int entryCol = 1;

  const std::vector<Sexpr> forms = parseSexprs(text);
  for (const Sexpr& form : forms) {
    if (form.kind != Sexpr::Kind::List || form.items.empty() ||
        form.items[0].kind != Sexpr::Kind::Atom)
      throw ParseError("expected (sorts ...), (code ...) or (entry ...)",
                       form.line, form.col);
    const std::string& head = form.items[0].text;
    if (head == "sorts") {
      for (std::size_t i = 1; i < form.items.size(); ++i) {
        const Sexpr& s = form.items[i];
        if (s.kind != Sexpr::Kind::Atom)
          throw ParseError("expected a sort name", s.line, s.col);
        builder.sortNames.push_back(s.text);
      }
    } else if (head == "code") {
      const Sexpr& name = builder.atomArg(form, 1);
      if (builder.pending.count(name.text) > 0)
        throw ParseError("duplicate code '" + name.text + "'", name.line,
                         name.col);
      builder.pending.emplace(name.text, &builder.arg(form, 2));
      builder.codeOrder.push_back(name.text);
    } else if (head == "entry") {
      const Sexpr& name = builder.atomArg(form, 1);
      entryName = name.text;
      haveEntry = true;
      entryLine = name.line;
      entryCol = name.col;
    } else {
      throw ParseError("unknown declaration '" + head + "'", form.line,
                       form.col);
    }
  }

  for (const std::string& name : builder.codeOrder)
    builder.resolveCode(name, *builder.pending.at(name));

  if (!haveEntry) {
    if (builder.codeOrder.size() == 1)
      entryName = builder.codeOrder.front();
    else
      throw ParseError("missing (entry Name) declaration", 1, 1);
  }
  if (builder.resolved.count(entryName) == 0)
    throw ParseError("unknown code '" + entryName + "'", entryLine, entryCol);

  std::vector<std::pair<std::string, Code>> codes;
  for (const std::string& name : builder.codeOrder)
    codes.emplace_back(name, builder.resolved.at(name));
  return Signature(std::move(builder.sortNames), std::move(codes),
                   std::move(entryName));
}

const Signature& lambdaSignature() {
  static const Signature sig({"tm"}, {{"Lam", lambda::lamCode()}}, "Lam");
  return sig;
}

const Signature& systemFSignature() {
  static const Signature sig(
      {"tm", "ty"},
      {{"FType", systemf::typeCode()}, {"FTerm", systemf::termCode()}},
      "FTerm");
  return sig;
}

}  // namespace mubind
