/*
 * Copyright 2026 the hk2 authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HK2_COLENGTH_CACHE_HPP
#define HK2_COLENGTH_CACHE_HPP

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>

namespace hk2 {

// Persistent memo for colength values.  Entries are keyed by a content hash
// of the canonical polynomial string plus (q, i), and stored one per line as
//     hash,q,i,colength
// Appends are serialized with an exclusive flock so concurrent runs sharing
// a cache file do not interleave partial lines.  An empty path gives a
// purely in-memory cache.
class ColengthCache {
public:
    using Key = std::tuple<std::string, std::uint64_t, std::uint64_t>;

    ColengthCache() = default;
    explicit ColengthCache(std::string file_path) { open(std::move(file_path)); }

    // Attach a backing file to an in-memory cache and pull in its rows.
    void open(std::string file_path) {
        path_ = std::move(file_path);
        reload();
    }

    const std::string& path() const { return path_; }

    std::optional<std::int64_t> lookup(const std::string& hash, std::uint64_t q,
                                       std::uint64_t i) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = entries_.find(Key{hash, q, i});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(const std::string& hash, std::uint64_t q, std::uint64_t i, std::int64_t value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto inserted = entries_.emplace(Key{hash, q, i}, value);
        if (!inserted.second) return;
        if (path_.empty()) return;
        std::ostringstream line;
        line << hash << ',' << q << ',' << i << ',' << value << '\n';
        append_line(line.str());
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return entries_.size();
    }

    // Pick up rows written by other processes since construction.
    void reload() {
        if (path_.empty()) return;
        std::lock_guard<std::mutex> lock(mu_);
        int fd = ::open(path_.c_str(), O_RDONLY);
        if (fd < 0) return;  // nothing written yet
        ::flock(fd, LOCK_SH);
        std::string contents;
        char buf[4096];
        ssize_t got;
        while ((got = ::read(fd, buf, sizeof buf)) > 0) contents.append(buf, std::size_t(got));
        ::flock(fd, LOCK_UN);
        ::close(fd);
        std::istringstream in(contents);
        std::string row;
        while (std::getline(in, row)) {
            if (row.empty()) continue;
            std::istringstream fields(row);
            std::string hash, qs, is, vs;
            if (!std::getline(fields, hash, ',')) continue;
            if (!std::getline(fields, qs, ',')) continue;
            if (!std::getline(fields, is, ',')) continue;
            if (!std::getline(fields, vs)) continue;
            try {
                entries_[Key{hash, std::stoull(qs), std::stoull(is)}] = std::stoll(vs);
            } catch (const std::exception&) {
                // skip malformed rows rather than poisoning the run
            }
        }
    }

private:
    void append_line(const std::string& line) {
        int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
        if (fd < 0) return;  // cache is best-effort; the value is already in memory
        ::flock(fd, LOCK_EX);
        const char* data = line.data();
        std::size_t left = line.size();
        while (left > 0) {
            ssize_t put = ::write(fd, data, left);
            if (put <= 0) break;
            data += put;
            left -= std::size_t(put);
        }
        ::flock(fd, LOCK_UN);
        ::close(fd);
    }

    std::string path_;
    mutable std::mutex mu_;
    std::map<Key, std::int64_t> entries_;
};

// Cache location from the environment; empty means in-memory only.
inline std::string default_cache_file() {
    const char* dir = std::getenv("HK2_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::string();
    std::string path(dir);
    if (!path.empty() && path.back() != '/') path += '/';
    return path + "colengths.csv";
}

}  // namespace hk2

#endif
