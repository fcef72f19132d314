#include <slc/image.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace slc {

void require_valid(const GrayImage& img, const char* what) {
    if (img.width < 1 || img.height < 1) {
        throw std::invalid_argument(std::string(what) + ": image dimensions must be >= 1");
    }
    if (img.data.size() != img.pixel_count()) {
        throw std::invalid_argument(std::string(what) + ": data length does not match dimensions");
    }
}

bool all_finite(const GrayImage& img) {
    return std::all_of(img.data.begin(), img.data.end(),
                       [](double v) { return std::isfinite(v); });
}

double mean(const GrayImage& img) {
    if (img.data.empty()) return 0.0;
    double s = 0.0;
    for (double v : img.data) s += v;
    return s / static_cast<double>(img.data.size());
}

GrayImage crop(const GrayImage& img, const Box& box) {
    require_valid(img, "crop");
    if (box.w < 1 || box.h < 1 || box.x < 0 || box.y < 0 ||
        box.x + box.w > img.width || box.y + box.h > img.height) {
        throw std::invalid_argument("crop: box outside image bounds");
    }
    GrayImage out(box.w, box.h);
    for (int y = 0; y < box.h; ++y) {
        const double* src = &img.data[static_cast<std::size_t>(box.y + y) * img.width + box.x];
        std::copy(src, src + box.w, &out.data[static_cast<std::size_t>(y) * box.w]);
    }
    return out;
}

GrayImage resize_bilinear(const GrayImage& img, int new_w, int new_h) {
    require_valid(img, "resize_bilinear");
    if (new_w < 1 || new_h < 1) {
        throw std::invalid_argument("resize_bilinear: target dimensions must be >= 1");
    }
    if (new_w == img.width && new_h == img.height) return img;

    GrayImage out(new_w, new_h);
    const double sx = static_cast<double>(img.width) / new_w;
    const double sy = static_cast<double>(img.height) / new_h;
    for (int y = 0; y < new_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, img.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < new_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const double wx = fx - x0;
            const double top = img.at(x0, y0) * (1.0 - wx) + img.at(x1, y0) * wx;
            const double bot = img.at(x0, y1) * (1.0 - wx) + img.at(x1, y1) * wx;
            out.at(x, y) = top * (1.0 - wy) + bot * wy;
        }
    }
    return out;
}

namespace {

int pgm_next_token(std::istream& in, std::string& tok) {
    tok.clear();
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return c;
}

long pgm_parse_int(std::istream& in, const std::string& path, const char* field) {
    std::string tok;
    pgm_next_token(in, tok);
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("load_pgm: bad " + std::string(field) + " in " + path);
    }
}

} // namespace

GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_pgm: cannot open " + path);

    std::string magic;
    pgm_next_token(in, magic);
    if (magic != "P5") throw std::runtime_error("load_pgm: not a binary PGM (P5): " + path);

    const long w = pgm_parse_int(in, path, "width");
    const long h = pgm_parse_int(in, path, "height");
    const long maxval = pgm_parse_int(in, path, "maxval");
    if (w < 1 || h < 1) throw std::runtime_error("load_pgm: degenerate dimensions in " + path);
    if (maxval < 1 || maxval > 255) {
        throw std::runtime_error("load_pgm: only 8-bit PGM supported: " + path);
    }

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(w) * h);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size())) {
        throw std::runtime_error("load_pgm: truncated pixel data in " + path);
    }

    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    for (std::size_t i = 0; i < raw.size(); ++i) img.data[i] = raw[i];
    return img;
}

void save_pgm(const std::string& path, const GrayImage& img) {
    require_valid(img, "save_pgm");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_pgm: cannot open " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> raw(img.pixel_count());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        raw[i] = static_cast<std::uint8_t>(std::clamp(std::lround(img.data[i]), 0L, 255L));
    }
    out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!out) throw std::runtime_error("save_pgm: write failed for " + path);
}

} // namespace slc
