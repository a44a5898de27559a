/**
 * SVG rendering of a composed-diagram graph document: one layer per
 * variable index (roots at the top, terminals at the bottom), solid edges
 * for true branches and dashed edges for false branches.
 */

import { GraphDoc, GraphNodeDoc } from "./api.js";

const LAYER_HEIGHT = 72;
const NODE_WIDTH = 118;
const NODE_HEIGHT = 30;
const GAP = 14;

function label(node: GraphNodeDoc): string {
  if (node.kind === "predicate") {
    return `${node.feature} <= ${node.threshold}`;
  }
  const value = node.value;
  if (Array.isArray(value)) {
    return `(${value.map((v) => formatNumber(v)).join(", ")})`;
  }
  return String(value);
}

function formatNumber(v: number): string {
  return Number.isInteger(v) ? String(v) : String(Math.round(v * 1000) / 1000);
}

export function renderGraph(graphText: string): SVGSVGElement {
  const doc = JSON.parse(graphText) as GraphDoc;
  const layers = new Map<number, GraphNodeDoc[]>();
  const terminalLayer = doc.variables.length;
  for (const node of doc.nodes) {
    const layer = node.kind === "terminal" ? terminalLayer : node.var ?? 0;
    if (!layers.has(layer)) layers.set(layer, []);
    layers.get(layer)!.push(node);
  }
  const orderedLayers = [...layers.keys()].sort((a, b) => a - b);
  const position = new Map<number, { x: number; y: number }>();
  let width = 320;
  orderedLayers.forEach((layer, row) => {
    const nodes = layers.get(layer)!;
    nodes.forEach((node, column) => {
      position.set(node.id, {
        x: GAP + column * (NODE_WIDTH + GAP) + NODE_WIDTH / 2,
        y: GAP + row * LAYER_HEIGHT + NODE_HEIGHT / 2,
      });
    });
    width = Math.max(width, GAP + nodes.length * (NODE_WIDTH + GAP));
  });
  const height = GAP * 2 + orderedLayers.length * LAYER_HEIGHT;

  const SVG_NS = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "diagram-view");

  for (const node of doc.nodes) {
    if (node.kind !== "predicate") continue;
    const from = position.get(node.id)!;
    for (const branch of ["true", "false"] as const) {
      const target = node[branch];
      if (target === undefined) continue;
      const to = position.get(target)!;
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(from.x));
      line.setAttribute("y1", String(from.y + NODE_HEIGHT / 2));
      line.setAttribute("x2", String(to.x));
      line.setAttribute("y2", String(to.y - NODE_HEIGHT / 2));
      line.setAttribute("class", branch === "true" ? "edge-true" : "edge-false");
      svg.appendChild(line);
    }
  }

  for (const node of doc.nodes) {
    const at = position.get(node.id)!;
    const group = document.createElementNS(SVG_NS, "g");
    const shape = document.createElementNS(SVG_NS, "rect");
    shape.setAttribute("x", String(at.x - NODE_WIDTH / 2));
    shape.setAttribute("y", String(at.y - NODE_HEIGHT / 2));
    shape.setAttribute("width", String(NODE_WIDTH));
    shape.setAttribute("height", String(NODE_HEIGHT));
    shape.setAttribute("rx", node.kind === "predicate" ? "14" : "3");
    shape.setAttribute(
      "class",
      node.kind === "predicate" ? "node-predicate" : "node-terminal",
    );
    group.appendChild(shape);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(at.x));
    text.setAttribute("y", String(at.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.textContent = label(node);
    group.appendChild(text);
    svg.appendChild(group);
  }
  return svg;
}
