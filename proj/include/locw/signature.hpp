#ifndef LOCW_SIGNATURE_HPP
#define LOCW_SIGNATURE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace locw {

struct FunctionSymbol {
  std::string name;
  int arity = 1;
  bool operator==(const FunctionSymbol&) const = default;
};

struct RelationSymbol {
  std::string name;
  int arity = 1;
  bool operator==(const RelationSymbol&) const = default;
};

// Which kind of symbol a declaration introduced, in declaration order.
enum class SymbolKind { Function, Relation, Constant };

struct DeclRef {
  SymbolKind kind;
  int index;  // into the per-kind vector
  bool operator==(const DeclRef&) const = default;
};

// A finite first-order signature. The binary order `<` and equality `=`
// are built in: present in every signature, never declared, never
// user-redefinable. Declared arities are positive.
class Signature {
 public:
  Signature() = default;

  void add_function(std::string name, int arity);
  void add_relation(std::string name, int arity);
  void add_constant(std::string name);

  const std::vector<FunctionSymbol>& functions() const { return functions_; }
  const std::vector<RelationSymbol>& relations() const { return relations_; }
  const std::vector<std::string>& constants() const { return constants_; }
  // Declarations in source order, across kinds.
  const std::vector<DeclRef>& declarations() const { return decls_; }

  std::optional<int> function_index(std::string_view name) const;
  std::optional<int> relation_index(std::string_view name) const;
  std::optional<int> constant_index(std::string_view name) const;
  bool has_symbol(std::string_view name) const;

  int max_function_arity() const;  // 0 when there are no function symbols
  int max_relation_arity() const;  // over declared relations only; 0 if none
  bool all_functions_unary() const;

  // All declared names, in declaration order.
  std::vector<std::string> symbol_names() const;

  bool operator==(const Signature&) const = default;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<FunctionSymbol> functions_;
  std::vector<RelationSymbol> relations_;
  std::vector<std::string> constants_;
  std::vector<DeclRef> decls_;
};

}  // namespace locw

#endif  // LOCW_SIGNATURE_HPP
