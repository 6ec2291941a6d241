#include "degenlift/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "degenlift/errors.hpp"

namespace degenlift {

void Report::add(const std::string& section, const std::string& key, const std::string& value)
{
    if (value.find('\n') != std::string::npos || key.find('\n') != std::string::npos) {
        throw InvalidArgument("report entries must be single-line");
    }
    auto it = std::find_if(sections_.begin(), sections_.end(),
                           [&](const Section& s) { return s.name == section; });
    if (it == sections_.end()) {
        sections_.push_back({section, {}});
        it = sections_.end() - 1;
    }
    it->entries.emplace_back(key, value);
}

std::string Report::get(const std::string& section, const std::string& key) const
{
    for (const auto& s : sections_) {
        if (s.name != section) {
            continue;
        }
        for (const auto& [k, v] : s.entries) {
            if (k == key) {
                return v;
            }
        }
    }
    return {};
}

bool Report::has(const std::string& section, const std::string& key) const
{
    for (const auto& s : sections_) {
        if (s.name == section) {
            for (const auto& [k, v] : s.entries) {
                if (k == key) {
                    return true;
                }
            }
        }
    }
    return false;
}

std::string Report::machine() const
{
    std::ostringstream os;
    os << "# degenlift report v" << kReportFormatVersion << "\n";
    for (const auto& s : sections_) {
        os << "[" << s.name << "]\n";
        for (const auto& [k, v] : s.entries) {
            os << k << " = " << v << "\n";
        }
    }
    return os.str();
}

std::string Report::text() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < sections_.size(); ++i) {
        const auto& s = sections_[i];
        if (i) {
            os << "\n";
        }
        os << s.name << "\n";
        std::size_t width = 0;
        for (const auto& [k, v] : s.entries) {
            width = std::max(width, k.size());
        }
        for (const auto& [k, v] : s.entries) {
            os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
        }
    }
    return os.str();
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

}  // namespace degenlift
