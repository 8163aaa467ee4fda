#include "tcm/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "tcm/errors.hpp"

namespace tcm::io {

using nlohmann::json;

std::string triple_json(const MarkovTriple& t) {
    return json::array({t.x.to_string(), t.y.to_string(), t.z.to_string()}).dump();
}

std::string triple_json(const EuclidTriple& t) {
    return json::array({t.a.to_string(), t.b.to_string(), t.c.to_string()}).dump();
}

std::string point_json(const TropPoint3& p) {
    return json::array({p.u.to_string(), p.v.to_string(), p.w.to_string()}).dump();
}

std::string matrix_json(const IntMatrix2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}).dump();
}

std::string report_json(const EstimatorReport& rep) {
    json j;
    j["estimate"] = rep.estimate;
    j["n"] = rep.n;
    j["reference"] = rep.reference ? json(*rep.reference) : json(nullptr);
    j["rel_error"] = rep.rel_error ? json(*rep.rel_error) : json(nullptr);
    return j.dump();
}

std::string point_csv_row(const TropPoint3& p) {
    return p.u.to_string() + "," + p.v.to_string() + "," + p.w.to_string();
}

std::string markov_path_csv(const std::vector<MarkovTriple>& path) {
    std::string out = "n,x,y,z\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        out += std::to_string(i) + "," + path[i].x.to_string() + "," +
               path[i].y.to_string() + "," + path[i].z.to_string() + "\n";
    }
    return out;
}

std::string euclid_path_csv(const std::vector<EuclidTriple>& path) {
    std::string out = "n,x,y,z\n";
    for (std::size_t i = 0; i < path.size(); ++i) {
        out += std::to_string(i) + "," + path[i].a.to_string() + "," +
               path[i].b.to_string() + "," + path[i].c.to_string() + "\n";
    }
    return out;
}

std::string lambda_csv(const LambdaSeries& series) {
    std::string out = "k,lambda_k\n";
    char buf[64];
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i + 1, series.values[i]);
        out += buf;
    }
    return out;
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    std::error_code ec;
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open " + tmp + " for writing");
        os.write(content.data(), static_cast<std::streamsize>(content.size()));
        os.flush();
        if (!os) {
            os.close();
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed for " + tmp);
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

} // namespace tcm::io
