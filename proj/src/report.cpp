#include "heunalg/report.hpp"

#include <algorithm>
#include <utility>
#include <tuple>

namespace heunalg {

std::string_view to_string(Category c) {
    switch (c) {
        case Category::structural: return "structural";
        case Category::oracle: return "oracle";
        case Category::paper_claim: return "paper-claim";
    }
    return "?";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

CheckEntry& CheckReport::add(std::string check, std::string anchor, Category category, bool ok, std::string detail) {
    CheckEntry e;
    e.suite = suite_;
    e.check = std::move(check);
    e.anchor = std::move(anchor);
    e.category = category;
    e.verdict = ok ? Verdict::pass : Verdict::fail;
    e.detail = std::move(detail);
    entries_.push_back(std::move(e));
    return entries_.back();
}

CheckEntry& CheckReport::add(CheckEntry entry) {
    entry.suite = suite_;
    entries_.push_back(std::move(entry));
    return entries_.back();
}

CheckEntry& CheckReport::skip(std::string check, std::string anchor, Category category, std::string detail) {
    CheckEntry& e = add(std::move(check), std::move(anchor), category, true, std::move(detail));
    e.verdict = Verdict::skipped;
    return e;
}

void CheckReport::append(const CheckReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

void CheckReport::set_trial(std::size_t trial) {
    for (auto& e : entries_) e.trial = trial;
}

const CheckEntry* CheckReport::find(std::string_view check) const {
    for (const auto& e : entries_)
        if (e.check == check) return &e;
    return nullptr;
}

bool CheckReport::all_passed() const {
    return std::none_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.verdict == Verdict::fail; });
}

bool CheckReport::passed(std::string_view check) const {
    const CheckEntry* e = find(check);
    return e != nullptr && e->verdict == Verdict::pass;
}

std::size_t CheckReport::count(Category c, Verdict v) const {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) {
        return e.category == c && e.verdict == v;
    }));
}

void CheckReport::sort() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const CheckEntry& a, const CheckEntry& b) {
        return std::tie(a.suite, a.check, a.trial) < std::tie(b.suite, b.check, b.trial);
    });
}

}  // namespace heunalg
