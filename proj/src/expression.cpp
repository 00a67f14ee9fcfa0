#include "hassett/expression.hpp"

#include <cctype>
#include <string>

#include "hassett/errors.hpp"
#include "hassett/generator.hpp"

namespace hassett {

namespace {

std::string trim(std::string_view s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

int parse_mark(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw ParseError("expected a mark index");
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad mark index '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("bad mark index '" + t + "'");
  return value;
}

// Argument list of an atom written name(args); empty when the shape differs.
bool split_call(const std::string& atom, const std::string& name, std::string& args) {
  if (atom.size() < name.size() + 2 || atom.compare(0, name.size(), name) != 0) return false;
  if (atom[name.size()] != '(' || atom.back() != ')') return false;
  args = atom.substr(name.size() + 1, atom.size() - name.size() - 2);
  return true;
}

void append_atom(DivisorClass& out, const ModuliSpace& space, const std::string& atom,
                 const Rational& coef) {
  if (atom == "kappa") {
    out.add(Generator::kappa(), coef);
  } else if (atom == "lambda") {
    out.add(Generator::lambda(), coef);
  } else if (atom == "Dirr") {
    out.add(Generator::irr(), coef);
  } else if (atom == "psi") {
    out += coef * aggregate_classes(space).psi;
  } else if (atom == "Dnod") {
    out += coef * aggregate_classes(space).nodal;
  } else if (atom == "Dsec") {
    out += coef * aggregate_classes(space).section;
  } else if (std::string args; split_call(atom, "psi", args)) {
    out.add(make_psi(space, parse_mark(args)), coef);
  } else if (split_call(atom, "Dsec", args)) {
    size_t comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("Dsec needs two indices: '" + atom + "'");
    out.add(make_section_pair(space, parse_mark(args.substr(0, comma)),
                              parse_mark(args.substr(comma + 1))),
            coef);
  } else if (split_call(atom, "D", args)) {
    size_t semi = args.find(';');
    if (semi == std::string::npos) {
      throw ParseError("boundary atom needs the form D(genus;{marks}): '" + atom + "'");
    }
    MarkSet marks = MarkSet::parse(trim(args.substr(semi + 1)));
    // conventional zeroes parse to nothing; nonexistent strata throw
    out.add(normalize_nodal_index(space, parse_mark(args.substr(0, semi)), marks), coef);
  } else {
    throw ParseError("unrecognized generator '" + atom + "'");
  }
}

void append_term(DivisorClass& out, const ModuliSpace& space, const std::string& term,
                 int sign) {
  size_t star = std::string::npos;
  int depth = 0;
  for (size_t k = 0; k < term.size(); ++k) {
    char c = term[k];
    if (c == '(' || c == '{') {
      ++depth;
    } else if (c == ')' || c == '}') {
      --depth;
    } else if (c == '*' && depth == 0) {
      star = k;
      break;
    }
  }
  Rational coef(sign);
  std::string atom;
  if (star != std::string::npos) {
    coef *= Rational::parse(trim(term.substr(0, star)));
    atom = trim(term.substr(star + 1));
    if (atom.empty()) throw ParseError("missing generator after '*' in '" + term + "'");
  } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
    if (!Rational::parse(term).is_zero()) {
      throw ParseError("bare number '" + term + "' (only 0 stands alone; use coef*generator)");
    }
    return;
  } else {
    atom = term;
  }
  append_atom(out, space, atom, coef);
}

}  // namespace

DivisorClass parse_class_expression(const ModuliSpace& space, std::string_view text) {
  DivisorClass out(space);
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == n) throw ParseError("empty class expression");
  int sign = 1;
  if (text[i] == '+') {
    ++i;
  } else if (text[i] == '-') {
    sign = -1;
    ++i;
  }
  while (true) {
    skip_ws();
    size_t start = i;
    int depth = 0;
    while (i < n) {
      char c = text[i];
      if (c == '(' || c == '{') {
        ++depth;
      } else if (c == ')' || c == '}') {
        --depth;
      } else if ((c == '+' || c == '-') && depth == 0) {
        break;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced brackets in class expression");
    std::string term = trim(text.substr(start, i - start));
    if (term.empty()) throw ParseError("empty term in class expression");
    append_term(out, space, term, sign);
    if (i == n) break;
    sign = text[i] == '-' ? -1 : 1;
    ++i;
  }
  return out;
}

}  // namespace hassett
