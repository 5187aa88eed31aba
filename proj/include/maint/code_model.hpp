#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace maint {

struct FieldDecl {
    std::string name;
    std::string declared_type_name;
    bool doc_comment_present = false;
};

// One scanned expression that contains conditional operators (&&, ||, ?:).
struct ExpressionInfo {
    int line = 0;
    int conditional_ops = 0;
};

struct MethodNode {
    std::string name;
    std::string return_type_name; // empty for constructors
    std::vector<std::string> parameter_type_names;
    int statements = 0;
    int decision_points = 0;
    int operator_occurrences = 0;
    int distinct_operators = 0;
    int operand_occurrences = 0;
    int distinct_operands = 0;
    std::set<std::string> accessed_own_fields;
    // (class qualified name, field name); only targets resolved to a class
    // inside the snapshot are kept.
    std::set<std::pair<std::string, std::string>> accessed_foreign_fields;
    // (target class name or "unknown", method name). Constructor calls are
    // recorded as (type, "<init>").
    std::set<std::pair<std::string, std::string>> invoked_methods;
    bool doc_comment_present = false;
    int max_nesting_depth = 0;
    bool has_body = false;
    int decl_line = 0;
    std::vector<ExpressionInfo> expressions;
    std::vector<int> empty_catch_lines;
};

enum class ClassKind { Class, Interface, Enum };

const char *class_kind_name(ClassKind kind);
std::optional<ClassKind> class_kind_from_name(const std::string &name);

struct StringLiteralUse {
    std::string value; // unquoted, unescaped source text
    int count = 0;
    int first_line = 0;
};

struct ClassNode {
    std::string qualified_name; // package.Outer$Inner
    ClassKind kind = ClassKind::Class;
    std::optional<std::string> superclass_name;
    std::vector<std::string> implemented_interfaces;
    std::vector<FieldDecl> fields;
    std::vector<MethodNode> methods;
    bool doc_comment_present = false;
    int line_count = 1; // physical lines, declaration to closing brace
    int decl_line = 0;
    std::string source_file;
    std::vector<StringLiteralUse> string_literals; // sorted by value
    std::vector<int> commented_code_lines;

    // Innermost name segment (after the last '.' or '$').
    std::string simple_name() const;
    // Everything before the last '.'; empty for the default package.
    std::string package_name() const;
};

struct PackageNode {
    std::string qualified_name;
    std::vector<ClassNode> classes; // sorted by qualified_name
};

struct SizeVector {
    std::int64_t n_packages = 0;
    std::int64_t n_classes = 0;
    std::int64_t n_methods = 0;
    std::int64_t n_statements = 0;
    std::int64_t n_lines = 0;

    bool operator==(const SizeVector &) const = default;
};

// Immutable model of one version snapshot. Construction validates the model
// invariants and canonicalizes ordering; afterwards the snapshot is read-only
// and safe to share across threads.
class Snapshot {
public:
    Snapshot() = default;

    // `classes` may arrive in any order; `extra_packages` lists packages that
    // contain no classes (they still count toward the size vector).
    // Throws Error on duplicate package/class names or broken node invariants.
    static Snapshot build(std::string version_label, std::string source_root,
                          std::vector<ClassNode> classes,
                          std::vector<std::string> extra_packages = {});

    const std::string &version_label() const { return version_label_; }
    const std::string &source_root() const { return source_root_; }
    const std::vector<PackageNode> &packages() const { return packages_; }

    // All classes in lexicographic qualified-name order.
    std::vector<const ClassNode *> all_classes() const;
    std::int64_t class_count() const;

    // Exact, case-sensitive lookup; nullptr when absent.
    const ClassNode *find_class(const std::string &qualified_name) const;

private:
    std::string version_label_;
    std::string source_root_;
    std::vector<PackageNode> packages_;
};

SizeVector size_vector(const Snapshot &snapshot);

} // namespace maint
