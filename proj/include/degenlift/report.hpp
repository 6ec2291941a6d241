#ifndef DEGENLIFT_REPORT_HPP
#define DEGENLIFT_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace degenlift {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportFormatVersion = 1;

// Ordered sections of ordered key/value pairs. Both renderings are derived
// from this one value; keys and values are single-line strings.
class Report {
public:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    // Appends to the named section, creating it at the end if needed.
    void add(const std::string& section, const std::string& key, const std::string& value);
    const std::vector<Section>& sections() const { return sections_; }
    // Value of section.key, or empty if absent.
    std::string get(const std::string& section, const std::string& key) const;
    bool has(const std::string& section, const std::string& key) const;

    // "[section]" headers followed by "key = value" lines.
    std::string machine() const;
    std::string text() const;

private:
    std::vector<Section> sections_;
};

std::string sha256_hex(const std::string& data);

}  // namespace degenlift

#endif
