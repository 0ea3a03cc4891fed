/** Preview server: /render (GET query / POST body), fixture gallery, assets.
 *
 * The page itself does all decoding; this server only hands out static
 * files and, for POST bodies too large for a query string, re-embeds the
 * payload into the page as a window-scoped string.
 */

import express from "express";
import { readFileSync, readdirSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

const here = path.dirname(fileURLToPath(import.meta.url));
const pubDir = path.join(here, "public");
const distDir = path.join(here, "dist");
const goldenDir = path.resolve(here, "../src/a2uikit/resources/fixtures/golden");

const app = express();
app.use(express.json({ limit: "8mb" }));
app.use("/dist", express.static(distDir));
app.use("/assets", express.static(pubDir));

const renderHtml = () => readFileSync(path.join(pubDir, "render.html"), "utf8");

app.get("/render", (_req, res) => {
  res.type("html").send(renderHtml());
});

// POST-body variant for payloads that would not fit in a URL. The body is
// the same JSON the query parameter would carry (array or envelope).
app.post("/render", (req, res) => {
  const payload = JSON.stringify(JSON.stringify(req.body)).replaceAll("<", "\\u003c");
  const tag = `<script>window.__A2UI_PAYLOAD__ = ${payload};</script>`;
  res.type("html").send(renderHtml().replace("<!--A2UI_PAYLOAD-->", tag));
});

app.get("/fixtures.json", (_req, res) => {
  const fixtures = readdirSync(goldenDir)
    .filter((f) => f.endsWith(".json"))
    .sort()
    .map((f) => {
      const doc = JSON.parse(readFileSync(path.join(goldenDir, f), "utf8"));
      const messages = encodeURIComponent(JSON.stringify(doc.a2ui ?? []));
      return { name: f.replace(/\.json$/, ""), url: `/render?messages=${messages}` };
    });
  res.json(fixtures);
});

app.get(["/", "/gallery"], (_req, res) => {
  res.sendFile(path.join(pubDir, "gallery.html"));
});

const port = Number(process.env.PORT ?? 5173);
app.listen(port, () => {
  console.log(`a2ui preview server on http://localhost:${port}`);
});
