#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heunalg/rational.hpp"

namespace heunalg {

/// structural: identities true by construction (controls); oracle: checks of the implementation against an
/// independent computation; paper_claim: a printed closed form or assertion compared to the oracle.
enum class Category { structural, oracle, paper_claim };
enum class Verdict { pass, fail, skipped };

std::string_view to_string(Category c);
std::string_view to_string(Verdict v);

using NamedValues = std::vector<std::pair<std::string, std::string>>;

struct CheckEntry {
    std::string suite;
    std::string check;
    std::string anchor;
    Category category = Category::oracle;
    Verdict verdict = Verdict::pass;
    std::size_t trial = 0;
    std::string detail;
    NamedValues witness;
    NamedValues fitted_constants;

    [[nodiscard]] bool passed() const { return verdict == Verdict::pass; }
};

class CheckReport {
public:
    CheckReport() = default;
    explicit CheckReport(std::string suite) : suite_(std::move(suite)) {}

    [[nodiscard]] const std::string& suite() const { return suite_; }
    [[nodiscard]] const std::vector<CheckEntry>& entries() const { return entries_; }

    CheckEntry& add(std::string check, std::string anchor, Category category, bool ok, std::string detail = {});
    /// Appends a prepared entry under this report's suite.
    CheckEntry& add(CheckEntry entry);
    CheckEntry& skip(std::string check, std::string anchor, Category category, std::string detail);
    void append(const CheckReport& other);
    void set_trial(std::size_t trial);

    [[nodiscard]] const CheckEntry* find(std::string_view check) const;
    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] bool passed(std::string_view check) const;
    [[nodiscard]] std::size_t count(Category c, Verdict v) const;

    /// Stable order: suite, check name, trial.
    void sort();

private:
    std::string suite_;
    std::vector<CheckEntry> entries_;
};

/// Witness helper: name -> exact rational text.
inline std::pair<std::string, std::string> wv(std::string name, const Rational& value) {
    return {std::move(name), value.str()};
}

}  // namespace heunalg
