/// Public library surface.

export { App, render } from './app';
export { SCENE_DATA_ID, SceneError, parseScene, readEmbeddedScene } from './scene';
export {
    clampSlider, createView, currentScene, hoverVertex, nodeFileName,
    objectiveSlide, paneIndices, setSlider, stepBnb, toggleConstraint,
    toggleForm, tooltipText,
} from './view';
export type { StepDirection, ViewState } from './view';
export type * from './types';
