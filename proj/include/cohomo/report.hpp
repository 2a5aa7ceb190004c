#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cohomo {

enum class Status { pass, fail, info };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "?";
}

struct CheckRecord {
  std::string id;
  std::string section;
  std::string human;
  Status status;
  std::string payload;
};

/// Ordered check records. Text lines look like "[PASS] human"; machine
/// lines are "id<TAB>status<TAB>payload".
class Report {
 public:
  void add(const std::string& section, const std::string& id, Status status, const std::string& human,
           const std::string& payload = "") {
    records_.push_back({section + "." + id, section, human, status, payload});
  }
  void pass(const std::string& section, const std::string& id, const std::string& human,
            const std::string& payload = "") {
    add(section, id, Status::pass, human, payload);
  }
  void fail(const std::string& section, const std::string& id, const std::string& human,
            const std::string& payload = "") {
    add(section, id, Status::fail, human, payload);
  }
  void check(bool ok, const std::string& section, const std::string& id, const std::string& human,
             const std::string& payload = "") {
    add(section, id, ok ? Status::pass : Status::fail, human, payload);
  }

  const std::vector<CheckRecord>& records() const { return records_; }
  bool passed() const { return first_failure() == nullptr; }

  const CheckRecord* first_failure() const {
    for (const auto& r : records_)
      if (r.status == Status::fail) return &r;
    return nullptr;
  }

  const CheckRecord* find(const std::string& id) const {
    for (const auto& r : records_)
      if (r.id == id) return &r;
    return nullptr;
  }

  std::vector<std::string> sections() const {
    std::vector<std::string> out;
    for (const auto& r : records_)
      if (out.empty() || out.back() != r.section) out.push_back(r.section);
    return out;
  }

  /// Printed after everything else in text mode.
  void set_conclusion(std::string line) { conclusion_ = std::move(line); }
  const std::string& conclusion() const { return conclusion_; }

  std::string render_text() const {
    const bool headers = sections().size() > 1;
    std::string out, current;
    for (const auto& r : records_) {
      if (headers && r.section != current) {
        current = r.section;
        out += "== " + current + " ==\n";
      }
      std::string tag = r.status == Status::pass ? "[PASS] " : r.status == Status::fail ? "[FAIL] " : "[INFO] ";
      out += tag + r.human + "\n";
    }
    if (const auto* f = first_failure()) {
      out += "FAILED at " + f->id + ": " + f->human + "\n";
    } else if (headers) {
      std::size_t n = 0;
      for (const auto& r : records_)
        if (r.status == Status::pass) ++n;
      out += "OVERALL: PASS (" + std::to_string(n) + " checks)\n";
    }
    if (!conclusion_.empty()) out += conclusion_ + "\n";
    return out;
  }

  std::string render_machine() const {
    std::string out;
    for (const auto& r : records_) out += r.id + "\t" + status_name(r.status) + "\t" + r.payload + "\n";
    const auto* f = first_failure();
    out += std::string("overall\t") + (f ? "fail\t" + f->id : "pass\t" + std::to_string(records_.size())) + "\n";
    return out;
  }

 private:
  std::vector<CheckRecord> records_;
  std::string conclusion_;
};

}  // namespace cohomo
