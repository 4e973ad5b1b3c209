/* Self-contained scene viewer.
 *
 * Reads the JSON document from the element with id "scene-data" and renders
 * the four interface sections: the feasible region (A), the constraint list
 * (B), the algebra pane (C), and the sliders (D). Every displayed number is
 * taken verbatim from the scene (exact strings for algebra, floats for
 * geometry); the viewer does no arithmetic on LP data beyond projecting
 * float coordinates to the screen.
 */
(function () {
  "use strict";

  var NS = "http://www.w3.org/2000/svg";

  function showBanner(message) {
    var div = document.createElement("div");
    div.style.cssText =
      "margin:2rem;padding:1rem;border:2px solid #c0392b;background:#fdecea;" +
      "color:#c0392b;font:14px/1.4 system-ui,sans-serif;border-radius:6px;";
    div.textContent = message;
    document.body.appendChild(div);
  }

  var dataEl = document.getElementById("scene-data");
  if (!dataEl) {
    showBanner("No scene data found on this page.");
    return;
  }
  var scene;
  try {
    scene = JSON.parse(dataEl.textContent);
  } catch (err) {
    showBanner("Unreadable scene data: " + err.message);
    return;
  }
  var major = parseInt(String(scene.version).split(".")[0], 10);
  if (major !== 1) {
    showBanner("Unsupported scene version " + scene.version + " (this viewer reads version 1).");
    return;
  }

  var css =
    ".lv-root{font:14px/1.45 system-ui,sans-serif;color:#1a1a1a;margin:0 auto;max-width:1180px;padding:1rem;}" +
    ".lv-head{margin:0 0 .6rem 0;font-size:1.15rem;font-weight:600;}" +
    ".lv-cols{display:flex;flex-wrap:wrap;gap:1rem;align-items:flex-start;}" +
    ".lv-left{flex:1 1 430px;min-width:320px;}" +
    ".lv-right{flex:1 1 480px;min-width:360px;}" +
    ".lv-panel{background:#fff;border:1px solid #ddd;border-radius:8px;padding:.75rem;margin-bottom:1rem;}" +
    ".lv-panel h2{margin:0 0 .5rem 0;font-size:.8rem;text-transform:uppercase;letter-spacing:.06em;color:#666;}" +
    ".lv-svg{width:100%;height:auto;display:block;background:#f4f7fb;border-radius:6px;touch-action:none;}" +
    ".lv-constraints{list-style:none;margin:0;padding:0;}" +
    ".lv-constraints li{padding:.25rem .5rem;border-radius:4px;cursor:pointer;font-family:ui-monospace,monospace;}" +
    ".lv-constraints li:hover{background:#eef3fa;}" +
    ".lv-constraints li.lv-on{background:#fde6c8;border-left:3px solid #e67e22;}" +
    ".lv-pane-grid{display:flex;gap:.75rem;flex-wrap:wrap;}" +
    ".lv-pane{flex:1 1 200px;min-width:0;}" +
    ".lv-pane h3{margin:.1rem 0 .3rem 0;font-size:.85rem;color:#444;}" +
    ".lv-pane pre{margin:0;padding:.5rem;background:#0f172a;color:#e2e8f0;border-radius:6px;" +
    "font:12px/1.5 ui-monospace,monospace;overflow-x:auto;}" +
    ".lv-meta{margin:.4rem 0 0 0;font-size:.85rem;color:#555;}" +
    ".lv-slider-row{display:flex;align-items:center;gap:.6rem;margin:.4rem 0;}" +
    ".lv-slider-row input[type=range]{flex:1;}" +
    ".lv-slider-row .lv-val{font-family:ui-monospace,monospace;min-width:5.5rem;text-align:right;}" +
    ".lv-btn{border:1px solid #bbb;background:#f6f6f6;border-radius:4px;padding:.2rem .6rem;cursor:pointer;font:inherit;}" +
    ".lv-btn:hover{background:#ececec;}" +
    ".lv-tip{position:fixed;pointer-events:none;background:#0f172a;color:#e2e8f0;padding:.45rem .6rem;" +
    "border-radius:6px;font:12px/1.5 ui-monospace,monospace;z-index:10;white-space:pre;display:none;box-shadow:0 2px 8px rgba(0,0,0,.35);}" +
    ".lv-tree{list-style:none;margin:0;padding-left:1rem;font-family:ui-monospace,monospace;font-size:.85rem;}" +
    ".lv-tree li{margin:.1rem 0;}" +
    ".lv-tree .lv-here{background:#fde6c8;border-radius:3px;padding:0 .25rem;font-weight:600;}" +
    ".lv-badge{display:inline-block;padding:0 .45rem;border-radius:9px;font-size:.75rem;background:#e8eef7;color:#34495e;margin-left:.4rem;}";
  var styleEl = document.createElement("style");
  styleEl.textContent = css;
  document.head.appendChild(styleEl);

  var mount = document.getElementById("app") || document.body;

  // ---------------------------------------------------------------- state
  var state = {
    pos: scene.iterations.length - 1, // slider position, may be half-integer
    tick: scene.levels ? scene.levels.length - 1 : 0,
    showLevel: false,
    highlighted: {},
    form: scene.options.form,
    yaw: 0.65,
    pitch: 0.5,
    zoom: 1,
  };
  var n = scene.lp.n;
  var is3d = n === 3;

  function h(tag, attrs, children) {
    var el = document.createElement(tag);
    if (attrs) {
      Object.keys(attrs).forEach(function (k) {
        if (k === "text") el.textContent = attrs[k];
        else if (k.slice(0, 2) === "on") el.addEventListener(k.slice(2), attrs[k]);
        else el.setAttribute(k, attrs[k]);
      });
    }
    (children || []).forEach(function (c) { el.appendChild(c); });
    return el;
  }
  function s(tag, attrs) {
    var el = document.createElementNS(NS, tag);
    if (attrs) {
      Object.keys(attrs).forEach(function (k) { el.setAttribute(k, attrs[k]); });
    }
    return el;
  }

  // ------------------------------------------------------------ projection
  var W = 640, H = 480;

  function project3(p) {
    var cy = Math.cos(state.yaw), sy = Math.sin(state.yaw);
    var cp = Math.cos(state.pitch), sp = Math.sin(state.pitch);
    var x = p[0] * cy - p[1] * sy;
    var y = p[0] * sy + p[1] * cy;
    var z = p[2];
    var y2 = y * cp - z * sp;
    var z2 = y * sp + z * cp;
    return [x, z2, y2]; // screen-x, screen-y(up), depth
  }

  function collectPoints() {
    var pts = [[0, 0, 0].slice(0, n)];
    scene.polytope.vertices.forEach(function (v) { pts.push(v.coords); });
    (scene.levels || []).forEach(function (lv) {
      lv.points.forEach(function (p) { pts.push(p); });
    });
    return pts;
  }

  function makeMapper() {
    var pts = collectPoints().map(function (p) {
      return is3d ? project3(p) : [p[0], p[1], 0];
    });
    var xs = pts.map(function (p) { return p[0]; });
    var ys = pts.map(function (p) { return p[1]; });
    var minX = Math.min.apply(null, xs), maxX = Math.max.apply(null, xs);
    var minY = Math.min.apply(null, ys), maxY = Math.max.apply(null, ys);
    var spanX = Math.max(maxX - minX, 1e-9), spanY = Math.max(maxY - minY, 1e-9);
    var scale = Math.min((W - 80) / spanX, (H - 80) / spanY) * state.zoom;
    var cx = (minX + maxX) / 2, cyy = (minY + maxY) / 2;
    return function (p) {
      var q = is3d ? project3(p) : [p[0], p[1], 0];
      return {
        x: W / 2 + (q[0] - cx) * scale,
        y: H / 2 - (q[1] - cyy) * scale,
        depth: q[2],
      };
    };
  }

  // ------------------------------------------------------------- tooltips
  var tip = h("div", { class: "lv-tip" });
  document.body.appendChild(tip);
  function tooltipText(vertex) {
    var hv = vertex.hover;
    var lines = [];
    for (var i = 0; i < hv.labels.length; i++) {
      lines.push(hv.labels[i] + " = " + hv.values[i]);
    }
    lines.push("objective = " + hv.objective);
    if (hv.bases !== null) {
      hv.bases.forEach(function (basis) {
        lines.push("basis {" + basis.join(", ") + "}");
      });
    }
    return lines.join("\n");
  }
  function showTip(evt, text) {
    tip.textContent = text;
    tip.style.display = "block";
    tip.style.left = Math.min(evt.clientX + 14, window.innerWidth - 240) + "px";
    tip.style.top = evt.clientY + 14 + "px";
  }
  function hideTip() { tip.style.display = "none"; }

  // ------------------------------------------------------------ region (A)
  var svg = s("svg", { class: "lv-svg", viewBox: "0 0 " + W + " " + H });

  function orderedHull(ids, mapper) {
    var pts = ids.map(function (id) {
      var v = scene.polytope.vertices[id];
      var m = mapper(v.coords);
      return { id: id, x: m.x, y: m.y };
    });
    var cx = 0, cy = 0;
    pts.forEach(function (p) { cx += p.x; cy += p.y; });
    cx /= pts.length; cy /= pts.length;
    pts.sort(function (a, b) {
      return Math.atan2(a.y - cy, a.x - cx) - Math.atan2(b.y - cy, b.x - cx);
    });
    return pts;
  }

  function polyPoints(pts) {
    return pts.map(function (p) { return p.x.toFixed(2) + "," + p.y.toFixed(2); }).join(" ");
  }

  function pathVertices() {
    // Iterations up to the slider define the emphasized walk.
    var out = [];
    scene.iterations.forEach(function (it, idx) {
      if (it.vertex !== null && idx <= Math.floor(state.pos)) {
        out.push(it.vertex);
      }
    });
    return out;
  }

  function drawScene() {
    while (svg.firstChild) svg.removeChild(svg.firstChild);
    var mapper = makeMapper();
    var poly = scene.polytope;

    if (poly.empty) {
      var msg = s("text", { x: W / 2, y: H / 2, "text-anchor": "middle", fill: "#888", "font-size": "16" });
      msg.textContent = "The feasible region is empty.";
      svg.appendChild(msg);
      return;
    }

    // Filled region: facets in 3D (painter order), the vertex hull in 2D.
    if (is3d && poly.facets.length) {
      var facets = poly.facets.map(function (f) {
        var depth = 0;
        f.vertices.forEach(function (id) {
          depth += mapper(poly.vertices[id].coords).depth;
        });
        return { f: f, depth: depth / f.vertices.length };
      });
      facets.sort(function (a, b) { return a.depth - b.depth; });
      facets.forEach(function (entry) {
        var f = entry.f;
        var pts = f.vertices.map(function (id) { return mapper(poly.vertices[id].coords); });
        var on = f.constraint !== null && state.highlighted[f.constraint];
        svg.appendChild(s("polygon", {
          points: polyPoints(pts),
          fill: on ? "rgba(230,126,34,.45)" : f.synthetic ? "rgba(148,163,184,.18)" : "rgba(59,130,246,.22)",
          stroke: on ? "#e67e22" : "rgba(30,64,175,.45)",
          "stroke-width": on ? 2.5 : 1,
        }));
      });
    } else if (!is3d && poly.vertices.length >= 3) {
      var hull = orderedHull(poly.vertices.map(function (v) { return v.id; }), mapper);
      svg.appendChild(s("polygon", {
        points: polyPoints(hull),
        fill: "rgba(59,130,246,.18)",
        stroke: "none",
      }));
    }

    // Edges.
    poly.edges.forEach(function (e) {
      var a = mapper(poly.vertices[e[0]].coords);
      var b = mapper(poly.vertices[e[1]].coords);
      var shared = null;
      if (!is3d) {
        // Highlighted constraint tight at both endpoints -> emphasize edge.
        var ta = poly.vertices[e[0]].tight, tb = poly.vertices[e[1]].tight;
        Object.keys(state.highlighted).forEach(function (cid) {
          cid = parseInt(cid, 10);
          if (ta.indexOf(cid) >= 0 && tb.indexOf(cid) >= 0) shared = cid;
        });
      }
      svg.appendChild(s("line", {
        x1: a.x, y1: a.y, x2: b.x, y2: b.y,
        stroke: shared !== null ? "#e67e22" : "#1e40af",
        "stroke-width": shared !== null ? 4 : 1.4,
        "stroke-linecap": "round",
      }));
    });

    // Objective level set for the current tick.
    if (state.showLevel && scene.levels && scene.levels.length) {
      var lv = scene.levels[state.tick];
      var pts = lv.points.map(function (p) { return mapper(p); });
      if (pts.length >= 2) {
        svg.appendChild(s(pts.length > 2 ? "polygon" : "polyline", {
          points: polyPoints(pts),
          fill: pts.length > 2 ? "rgba(22,163,74,.15)" : "none",
          stroke: "#16a34a",
          "stroke-width": 2.5,
          "stroke-dasharray": "7 4",
        }));
      } else if (pts.length === 1) {
        svg.appendChild(s("circle", {
          cx: pts[0].x, cy: pts[0].y, r: 9,
          fill: "none", stroke: "#16a34a", "stroke-width": 2.5,
        }));
      }
    }

    // Emphasized simplex walk up to the slider.
    var walk = pathVertices();
    for (var i = 0; i + 1 < walk.length; i++) {
      var a2 = mapper(poly.vertices[walk[i]].coords);
      var b2 = mapper(poly.vertices[walk[i + 1]].coords);
      svg.appendChild(s("line", {
        x1: a2.x, y1: a2.y, x2: b2.x, y2: b2.y,
        stroke: "#dc2626", "stroke-width": 3.2, "stroke-linecap": "round",
      }));
    }
    // Partial segment for half-integer slider positions.
    var lo = Math.floor(state.pos);
    if (state.pos > lo && lo + 1 < scene.iterations.length) {
      var va = scene.iterations[lo].vertex, vb = scene.iterations[lo + 1].vertex;
      if (va !== null && vb !== null && va !== vb) {
        var pa = mapper(poly.vertices[va].coords);
        var pb = mapper(poly.vertices[vb].coords);
        var t = state.pos - lo;
        svg.appendChild(s("line", {
          x1: pa.x, y1: pa.y,
          x2: pa.x + (pb.x - pa.x) * t, y2: pa.y + (pb.y - pa.y) * t,
          stroke: "#dc2626", "stroke-width": 3.2,
          "stroke-dasharray": "4 4", "stroke-linecap": "round",
        }));
      }
    }

    // Vertices (hover for the exact solution).
    var currentVertex = null;
    var curIt = scene.iterations[Math.round(state.pos)] || null;
    if (curIt && curIt.vertex !== null) currentVertex = curIt.vertex;
    poly.vertices.forEach(function (v) {
      var m = mapper(v.coords);
      var onWalk = walk.indexOf(v.id) >= 0;
      var c = s("circle", {
        cx: m.x, cy: m.y, r: v.id === currentVertex ? 7 : 5,
        fill: v.id === currentVertex ? "#dc2626" : onWalk ? "#f87171" : "#1e40af",
        stroke: "#fff", "stroke-width": 1.5, cursor: "pointer",
      });
      c.addEventListener("mousemove", function (evt) { showTip(evt, tooltipText(v)); });
      c.addEventListener("mouseleave", hideTip);
      svg.appendChild(c);
    });
  }

  // 3D orbit controls.
  if (is3d) {
    var dragging = false, lastX = 0, lastY = 0;
    svg.addEventListener("pointerdown", function (evt) {
      dragging = true; lastX = evt.clientX; lastY = evt.clientY;
      svg.setPointerCapture(evt.pointerId);
    });
    svg.addEventListener("pointermove", function (evt) {
      if (!dragging) return;
      state.yaw += (evt.clientX - lastX) * 0.008;
      state.pitch = Math.max(-1.4, Math.min(1.4, state.pitch + (evt.clientY - lastY) * 0.008));
      lastX = evt.clientX; lastY = evt.clientY;
      drawScene();
    });
    svg.addEventListener("pointerup", function () { dragging = false; });
    svg.addEventListener("wheel", function (evt) {
      evt.preventDefault();
      state.zoom = Math.max(0.3, Math.min(5, state.zoom * (evt.deltaY < 0 ? 1.1 : 0.9)));
      drawScene();
    }, { passive: false });
  }

  // ------------------------------------------------------ constraints (B)
  var constraintList = h("ul", { class: "lv-constraints" });
  scene.constraints.forEach(function (c) {
    var li = h("li", { text: c.label });
    li.addEventListener("click", function () {
      if (state.highlighted[c.id]) delete state.highlighted[c.id];
      else state.highlighted[c.id] = true;
      li.classList.toggle("lv-on");
      drawScene();
    });
    constraintList.appendChild(li);
  });

  // ----------------------------------------------------- algebra pane (C)
  var paneGrid = h("div", { class: "lv-pane-grid" });
  var paneMeta = h("p", { class: "lv-meta" });

  function paneFor(idx) {
    var it = scene.iterations[idx];
    var body = state.form === "tableau" ? it.tableau.text : it.dictionary.text;
    var title = "Iteration " + idx + (it.phase === 1 ? " (phase 1)" : "");
    var pre = h("pre", { text: body.join("\n") });
    return h("div", { class: "lv-pane" }, [h("h3", { text: title }), pre]);
  }

  function renderPane() {
    while (paneGrid.firstChild) paneGrid.removeChild(paneGrid.firstChild);
    var lo = Math.floor(state.pos), hi = Math.ceil(state.pos);
    paneGrid.appendChild(paneFor(lo));
    if (hi !== lo) paneGrid.appendChild(paneFor(hi)); // between two iterations
    var it = scene.iterations[lo];
    var bits = ["objective = " + it.objective_value];
    if (it.entering !== null) bits.push("entering x" + it.entering);
    if (it.leaving !== null) bits.push("leaving x" + it.leaving);
    if (it.degenerate) bits.push("degenerate step");
    paneMeta.textContent = bits.join("  ·  ");
  }

  var formBtn = h("button", { class: "lv-btn", text: "" });
  function syncFormBtn() {
    formBtn.textContent = state.form === "dictionary" ? "show tableau" : "show dictionary";
  }
  syncFormBtn();
  formBtn.addEventListener("click", function () {
    state.form = state.form === "dictionary" ? "tableau" : "dictionary";
    syncFormBtn();
    renderPane();
  });

  // ---------------------------------------------------------- sliders (D)
  var iterSlider = h("input", {
    type: "range", min: 0, max: scene.iterations.length - 1,
    step: 0.5, value: state.pos,
  });
  var iterLabel = h("span", { class: "lv-val" });
  function syncIter() {
    iterLabel.textContent = state.pos + " / " + (scene.iterations.length - 1);
    renderPane();
    drawScene();
  }
  iterSlider.addEventListener("input", function () {
    state.pos = parseFloat(iterSlider.value);
    syncIter();
  });

  var levelRow = null;
  if (scene.levels && scene.levels.length) {
    var levelSlider = h("input", {
      type: "range", min: 0, max: scene.levels.length - 1, step: 1, value: state.tick,
    });
    var levelLabel = h("span", { class: "lv-val" });
    var syncLevel = function () {
      levelLabel.textContent = scene.levels[state.tick].value; // exact string
      drawScene();
    };
    levelSlider.addEventListener("input", function () {
      state.tick = parseInt(levelSlider.value, 10);
      state.showLevel = true;
      syncLevel();
    });
    levelRow = h("div", { class: "lv-slider-row" }, [
      h("span", { text: "objective" }), levelSlider, levelLabel,
    ]);
    levelLabel.textContent = scene.levels[state.tick].value;
  } else {
    var disabled = h("input", { type: "range", disabled: "disabled" });
    levelRow = h("div", { class: "lv-slider-row" }, [
      h("span", { text: "objective" }), disabled,
      h("span", { class: "lv-val", text: "n/a" }),
    ]);
  }

  // --------------------------------------------------------- bnb panel
  function nodeFile(id) {
    var s = String(id);
    while (s.length < 3) s = "0" + s;
    return "node_" + s + ".html";
  }

  function bnbPanel() {
    var meta = scene.bnb;
    var rows = [];
    rows.push(h("p", {
      class: "lv-meta",
      text: "Node " + meta.node + " of " + meta.node_count + " — " + meta.status +
        (meta.parent === null ? " (root)" : ", parent " + meta.parent),
    }));
    if (meta.added_bounds.length) {
      rows.push(h("p", {
        class: "lv-meta",
        text: "Bounds: " + meta.added_bounds.map(function (b) { return b.label; }).join(", "),
      }));
    }
    if (meta.branch_pair) {
      rows.push(h("p", {
        class: "lv-meta",
        text: "Branches into: " + meta.branch_pair.map(function (b) { return b.label; }).join("  |  "),
      }));
    }
    if (meta.incumbent) {
      rows.push(h("p", {
        class: "lv-meta",
        text: "Incumbent: value " + meta.incumbent.value + " at (" +
          meta.incumbent.solution.join(", ") + ") from node " + meta.incumbent.node,
      }));
    }
    var nav = h("p", { class: "lv-meta" });
    if (meta.node > 0) {
      nav.appendChild(h("a", { href: nodeFile(meta.node - 1), text: "◀ previous node" }));
      nav.appendChild(document.createTextNode("   "));
    }
    if (meta.node + 1 < meta.node_count) {
      nav.appendChild(h("a", { href: nodeFile(meta.node + 1), text: "next node ▶" }));
    }
    rows.push(nav);

    var children = {};
    meta.tree.forEach(function (entry) {
      if (entry.parent !== null) {
        (children[entry.parent] = children[entry.parent] || []).push(entry.id);
      }
    });
    function subtree(id) {
      var entry = meta.tree[id];
      var label = "node " + id + " [" + entry.status + (entry.value === null ? "" : ", " + entry.value) + "]";
      var li = h("li");
      if (id === meta.node) {
        li.appendChild(h("span", { class: "lv-here", text: label }));
      } else {
        li.appendChild(h("a", { href: nodeFile(id), text: label }));
      }
      (children[id] || []).forEach(function (kid) {
        var ul = h("ul", { class: "lv-tree" });
        ul.appendChild(subtree(kid));
        li.appendChild(ul);
      });
      return li;
    }
    var roots = meta.tree.filter(function (e) { return e.parent === null; });
    var treeEl = h("ul", { class: "lv-tree" });
    roots.forEach(function (r) { treeEl.appendChild(subtree(r.id)); });
    rows.push(treeEl);
    return h("div", { class: "lv-panel" }, [h("h2", { text: "Branch & bound" })].concat(rows));
  }

  // ------------------------------------------------------------- assemble
  var title = scene.kind === "bnb_node"
    ? "Branch & bound — node " + scene.bnb.node
    : "Simplex visualization";
  var headBits = title + "  ·  max over " + n + " variables, " + scene.lp.m + " constraints";

  var root = h("div", { class: "lv-root" }, [
    h("div", { class: "lv-head", text: headBits }),
    h("div", { class: "lv-cols" }, [
      h("div", { class: "lv-left" }, [
        h("div", { class: "lv-panel" }, [h("h2", { text: "Feasible region" }), svg]),
        h("div", { class: "lv-panel" }, [
          h("h2", { text: "Constraints (click to highlight)" }),
          constraintList,
        ]),
      ]),
      h("div", { class: "lv-right" }, (scene.kind === "bnb_node" ? [bnbPanel()] : []).concat([
        h("div", { class: "lv-panel" }, [
          h("h2", { text: "Algebra" }),
          formBtn,
          paneGrid,
          paneMeta,
        ]),
        h("div", { class: "lv-panel" }, [
          h("h2", { text: "Sliders" }),
          h("div", { class: "lv-slider-row" }, [
            h("span", { text: "iteration" }), iterSlider, iterLabel,
          ]),
          levelRow,
        ]),
      ])),
    ]),
  ]);
  mount.appendChild(root);
  syncIter();
})();
