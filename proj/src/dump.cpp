#include "locw/dump.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "locw/errors.hpp"

namespace locw {

std::string dump_structure(const FiniteStructure& m) {
  m.check_complete();
  const Signature& sig = m.signature();
  std::ostringstream os;
  os << "domain " << m.size() << '\n';

  std::vector<std::string> fn_names;
  for (const auto& f : sig.functions()) fn_names.push_back(f.name);
  std::sort(fn_names.begin(), fn_names.end());
  for (const std::string& name : fn_names) {
    int fi = *sig.function_index(name);
    int arity = sig.functions()[size_t(fi)].arity;
    std::vector<int> args(size_t(arity), 0);
    while (true) {
      os << "fn " << name << ": (";
      for (size_t i = 0; i < args.size(); ++i) {
        if (i) os << ',';
        os << args[i];
      }
      os << ") -> " << m.fn_value(fi, args) << '\n';
      int pos = arity - 1;
      while (pos >= 0 && ++args[size_t(pos)] == m.size()) {
        args[size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  std::vector<std::string> rel_names;
  for (const auto& r : sig.relations()) rel_names.push_back(r.name);
  std::sort(rel_names.begin(), rel_names.end());
  for (const std::string& name : rel_names) {
    int ri = *sig.relation_index(name);
    for (const std::vector<int>& tuple : m.rel_tuples(ri)) {
      os << "rel " << name << ": (";
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << ',';
        os << tuple[i];
      }
      os << ")\n";
    }
  }

  std::map<std::string, int> consts;
  for (size_t ci = 0; ci < sig.constants().size(); ++ci) {
    consts[sig.constants()[ci]] = m.constant_value(int(ci));
  }
  for (const auto& [name, value] : consts) {
    os << "const " << name << " = " << value << '\n';
  }
  return os.str();
}

namespace {

std::vector<int> parse_tuple(std::istringstream& in, const std::string& line) {
  std::vector<int> out;
  char c = 0;
  in >> c;
  if (c != '(') throw InvalidInput("expected '(' in dump line: " + line);
  while (true) {
    int v = 0;
    if (!(in >> v)) throw InvalidInput("expected element in: " + line);
    out.push_back(v);
    in >> c;
    if (c == ')') break;
    if (c != ',') throw InvalidInput("expected ',' or ')' in: " + line);
  }
  return out;
}

}  // namespace

FiniteStructure parse_structure_dump(const std::string& text,
                                     const Signature& sig) {
  std::istringstream in(text);
  std::string line;
  std::optional<FiniteStructure> m;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "domain") {
      int size = 0;
      if (!(ls >> size)) throw InvalidInput("bad domain line: " + line);
      m.emplace(sig, size);
      continue;
    }
    if (head == "witness") continue;  // report metadata, not model content
    if (!m) throw InvalidInput("dump must start with a domain line");
    if (head == "fn") {
      std::string name;
      ls >> name;
      if (!name.empty() && name.back() == ':') name.pop_back();
      auto fi = sig.function_index(name);
      if (!fi) throw InvalidInput("unknown function in dump: " + name);
      std::vector<int> args = parse_tuple(ls, line);
      std::string arrow;
      int value = 0;
      if (!(ls >> arrow >> value) || arrow != "->") {
        throw InvalidInput("bad fn line: " + line);
      }
      m->set_fn_value(*fi, args, value);
    } else if (head == "rel") {
      std::string name;
      ls >> name;
      if (!name.empty() && name.back() == ':') name.pop_back();
      auto ri = sig.relation_index(name);
      if (!ri) throw InvalidInput("unknown relation in dump: " + name);
      m->set_rel(*ri, parse_tuple(ls, line));
    } else if (head == "const") {
      std::string name, eq;
      int value = 0;
      if (!(ls >> name >> eq >> value) || eq != "=") {
        throw InvalidInput("bad const line: " + line);
      }
      auto ci = sig.constant_index(name);
      if (!ci) throw InvalidInput("unknown constant in dump: " + name);
      m->set_constant(*ci, value);
    } else {
      throw InvalidInput("unrecognized dump line: " + line);
    }
  }
  if (!m) throw InvalidInput("empty model dump");
  m->check_complete();
  return *m;
}

}  // namespace locw
