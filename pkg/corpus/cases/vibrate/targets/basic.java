public class Shaker {
    public void Once(long milliseconds) {
        if (MyVibrator.hasVibrator()) {
            MyVibrator.vibrate(milliseconds);
        }
    }
}
