#include "maint/code_model.hpp"

#include <algorithm>
#include <map>

#include "maint/error.hpp"

namespace maint {

const char *class_kind_name(ClassKind kind) {
    switch (kind) {
    case ClassKind::Class: return "class";
    case ClassKind::Interface: return "interface";
    case ClassKind::Enum: return "enum";
    }
    return "class";
}

std::optional<ClassKind> class_kind_from_name(const std::string &name) {
    if (name == "class") return ClassKind::Class;
    if (name == "interface") return ClassKind::Interface;
    if (name == "enum") return ClassKind::Enum;
    return std::nullopt;
}

std::string ClassNode::simple_name() const {
    size_t pos = qualified_name.find_last_of(".$");
    if (pos == std::string::npos) return qualified_name;
    return qualified_name.substr(pos + 1);
}

std::string ClassNode::package_name() const {
    size_t pos = qualified_name.rfind('.');
    if (pos == std::string::npos) return "";
    return qualified_name.substr(0, pos);
}

namespace {

void check_method(const ClassNode &cls, const MethodNode &m) {
    auto fail = [&](const std::string &what) {
        throw Error("invariant violation in " + cls.qualified_name + "." + m.name + ": " + what);
    };
    if (m.distinct_operators > m.operator_occurrences)
        fail("distinct_operators exceeds operator_occurrences");
    if (m.distinct_operands > m.operand_occurrences)
        fail("distinct_operands exceeds operand_occurrences");
    if (m.decision_points < 0) fail("negative decision_points");
    if (m.statements < 0) fail("negative statements");
}

void check_class(const ClassNode &cls) {
    if (cls.qualified_name.empty())
        throw Error("invariant violation: class with empty qualified name");
    if (cls.line_count < 1)
        throw Error("invariant violation in " + cls.qualified_name + ": line_count must be >= 1");
    for (const FieldDecl &f : cls.fields) {
        if (f.name.empty())
            throw Error("invariant violation in " + cls.qualified_name + ": field with empty name");
    }
    for (const MethodNode &m : cls.methods) check_method(cls, m);
}

} // namespace

Snapshot Snapshot::build(std::string version_label, std::string source_root,
                         std::vector<ClassNode> classes,
                         std::vector<std::string> extra_packages) {
    std::map<std::string, PackageNode> by_package;
    for (const std::string &pkg : extra_packages) by_package[pkg]; // may stay empty

    for (ClassNode &cls : classes) {
        check_class(cls);
        // Canonical member ordering: methods by (name, parameter types,
        // declaration line), fields by name, literal uses by value.
        std::sort(cls.methods.begin(), cls.methods.end(),
                  [](const MethodNode &a, const MethodNode &b) {
                      if (a.name != b.name) return a.name < b.name;
                      if (a.parameter_type_names != b.parameter_type_names)
                          return a.parameter_type_names < b.parameter_type_names;
                      return a.decl_line < b.decl_line;
                  });
        std::sort(cls.fields.begin(), cls.fields.end(),
                  [](const FieldDecl &a, const FieldDecl &b) { return a.name < b.name; });
        std::sort(cls.string_literals.begin(), cls.string_literals.end(),
                  [](const StringLiteralUse &a, const StringLiteralUse &b) {
                      return a.value < b.value;
                  });
        std::sort(cls.commented_code_lines.begin(), cls.commented_code_lines.end());
        std::string pkg = cls.package_name();
        by_package[pkg].classes.push_back(std::move(cls));
    }

    Snapshot snap;
    snap.version_label_ = std::move(version_label);
    snap.source_root_ = std::move(source_root);
    for (auto &[pkg, node] : by_package) {
        node.qualified_name = pkg;
        std::sort(node.classes.begin(), node.classes.end(),
                  [](const ClassNode &a, const ClassNode &b) {
                      return a.qualified_name < b.qualified_name;
                  });
        for (size_t i = 1; i < node.classes.size(); ++i) {
            if (node.classes[i].qualified_name == node.classes[i - 1].qualified_name)
                throw Error("invariant violation: duplicate class name " +
                            node.classes[i].qualified_name);
        }
        snap.packages_.push_back(std::move(node));
    }
    return snap;
}

std::vector<const ClassNode *> Snapshot::all_classes() const {
    std::vector<const ClassNode *> out;
    for (const PackageNode &pkg : packages_)
        for (const ClassNode &cls : pkg.classes) out.push_back(&cls);
    std::sort(out.begin(), out.end(), [](const ClassNode *a, const ClassNode *b) {
        return a->qualified_name < b->qualified_name;
    });
    return out;
}

std::int64_t Snapshot::class_count() const {
    std::int64_t n = 0;
    for (const PackageNode &pkg : packages_) n += static_cast<std::int64_t>(pkg.classes.size());
    return n;
}

const ClassNode *Snapshot::find_class(const std::string &qualified_name) const {
    size_t pos = qualified_name.rfind('.');
    std::string pkg = pos == std::string::npos ? "" : qualified_name.substr(0, pos);
    auto it = std::lower_bound(packages_.begin(), packages_.end(), pkg,
                               [](const PackageNode &node, const std::string &name) {
                                   return node.qualified_name < name;
                               });
    if (it == packages_.end() || it->qualified_name != pkg) return nullptr;
    auto cit = std::lower_bound(it->classes.begin(), it->classes.end(), qualified_name,
                                [](const ClassNode &node, const std::string &name) {
                                    return node.qualified_name < name;
                                });
    if (cit == it->classes.end() || cit->qualified_name != qualified_name) return nullptr;
    return &*cit;
}

SizeVector size_vector(const Snapshot &snapshot) {
    SizeVector sv;
    sv.n_packages = static_cast<std::int64_t>(snapshot.packages().size());
    for (const PackageNode &pkg : snapshot.packages()) {
        for (const ClassNode &cls : pkg.classes) {
            ++sv.n_classes;
            sv.n_methods += static_cast<std::int64_t>(cls.methods.size());
            for (const MethodNode &m : cls.methods) sv.n_statements += m.statements;
            sv.n_lines += cls.line_count;
        }
    }
    return sv;
}

} // namespace maint
